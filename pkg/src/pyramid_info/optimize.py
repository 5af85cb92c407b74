"""Information maximization over the symmetric family, oracles, and sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize

from .ensemble import PyramidEnsemble, gamma_bounds, make_ensemble
from .errors import DomainError, SingularStart
from .information import edge_channel_information, symmetric_amplitudes

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

# valid-gamma margin applied when clamping sweep grids away from degenerate endpoints
CLAMP_MARGIN = 1e-6

_SINGULAR_RTOL = 1e-12
_START_REDRAW_CAP = 100
_NM_OPTIONS = {
    "maxiter": 20000,
    "maxfev": 40000,
    "xatol": 1e-8,
    "fatol": 1e-10,
    "adaptive": True,
}


@dataclass(frozen=True)
class ImsResult:
    """Family optimum for one ensemble; delta_i = i_ims - i_srm is >= 0."""

    s_opt: float
    lambda_opt: float
    i_ims: float
    i_srm: float
    delta_i: float


@dataclass(frozen=True)
class OracleResult:
    i_best: float
    n_outcomes: int
    restarts: int
    seed: int
    converged_runs: int


@dataclass(frozen=True)
class SweepRecord:
    dim: int
    gamma: float
    i_srm: float
    i_ims: float
    delta_i: float
    s_opt: float
    lambda_opt: float
    p_srm: float
    p_ims: float


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid in the overlap gamma (the pyramid-angle cosine)."""

    gamma_min: float
    gamma_max: float
    gamma_steps: int

    def points(self) -> np.ndarray:
        return np.linspace(self.gamma_min, self.gamma_max, self.gamma_steps)


def _family_information(ens: PyramidEnsemble, s):
    a, b, _ = symmetric_amplitudes(ens, s)
    return edge_channel_information(ens.dim, a * a, b * b)


def _golden_max(f: Callable[[float], float], a: float, b: float, tol: float):
    """Golden-section maximization on [a, b]; returns the best point evaluated."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    best_x, best_f = (c, fc) if fc >= fd else (d, fd)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            x = c
            fc = fx = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            x = d
            fd = fx = f(d)
        if fx > best_f:
            best_x, best_f = x, fx
    return best_x, best_f


def optimize_ims(ens: PyramidEnsemble, grid_points: int = 2001, tol: float = 1e-10) -> ImsResult:
    """Maximize the family information over s in [-2/N, 0].  Deterministic.

    Dense grid scan first (the objective can be multimodal; both domain
    endpoints are orthonormal-basis measurements), then golden-section
    refinement of the best bracket down to width tol.  Grid ties within
    1e-14 are broken toward the largest s.  The grid contains s = 0, so the
    reported maximum can never fall below the square-root-measurement value.
    """
    if grid_points < 3:
        raise DomainError(f"grid_points must be >= 3, got {grid_points}")
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol:g}")
    grid = np.linspace(-2.0 / ens.dim, 0.0, grid_points)
    values = _family_information(ens, grid)
    i_srm = float(values[-1])

    ties = np.flatnonzero(values >= values.max() - 1e-14)
    idx = int(ties[-1])
    left = float(grid[max(idx - 1, 0)])
    right = float(grid[min(idx + 1, grid_points - 1)])
    s_best, i_best = _golden_max(lambda s: float(_family_information(ens, s)), left, right, tol)
    if float(values[idx]) > i_best:
        s_best, i_best = float(grid[idx]), float(values[idx])
    if i_srm > i_best:
        s_best, i_best = 0.0, i_srm

    lam = max(0.0, 1.0 - (1.0 + ens.dim * s_best) ** 2)
    return ImsResult(
        s_opt=s_best,
        lambda_opt=lam,
        i_ims=i_best,
        i_srm=i_srm,
        delta_i=i_best - i_srm,
    )


def default_outcome_count(dim: int, complex_mode: bool = False) -> int:
    """Rank-1 outcome count sufficient for extremal measurements: d(d+1)/2 real, d^2 complex."""
    return dim * dim if complex_mode else dim * (dim + 1) // 2


def _povm_probs(vectors: np.ndarray, psi: np.ndarray) -> np.ndarray | None:
    """Outcome table of the rank-1 POVM obtained by frame-normalizing raw vectors.

    Rows of `vectors` are the raw candidates v_k; the POVM elements are
    e_k e_k^dagger with e_k = S^{-1/2} v_k and S = sum_k v_k v_k^dagger.
    Returns None when S is numerically singular.
    """
    s_mat = vectors.T @ vectors.conj()
    w, u = np.linalg.eigh(s_mat)
    if w[0] <= _SINGULAR_RTOL * max(w[-1], 1.0):
        return None
    inv_sqrt = (u / np.sqrt(w)) @ u.conj().T
    amps = vectors.conj() @ (inv_sqrt @ psi)
    return np.abs(amps) ** 2


def _random_restart_search(
    ens: PyramidEnsemble,
    n_outcomes: int,
    restarts: int,
    seed: int,
    complex_mode: bool,
    score: Callable[[np.ndarray], float],
) -> tuple[float, int]:
    """Maximize `score` over frame-normalized rank-1 POVMs by restarted Nelder-Mead.

    Each restart draws uniform(-1,1) raw vectors from its own RNG stream
    derived from (seed, restart index), so the outcome is a deterministic
    function of the arguments and independent of scheduling.  Starts with a
    singular frame operator are redrawn (bounded), and a restart whose draws
    never succeed is skipped; SingularStart is raised only if every restart
    is skipped.
    """
    n = ens.dim
    psi = ens.states()
    n_params = n_outcomes * n * (2 if complex_mode else 1)

    def unpack(x: np.ndarray) -> np.ndarray:
        if complex_mode:
            half = n_outcomes * n
            return x[:half].reshape(n_outcomes, n) + 1j * x[half:].reshape(n_outcomes, n)
        return x.reshape(n_outcomes, n)

    def objective(x: np.ndarray) -> float:
        probs = _povm_probs(unpack(x), psi)
        if probs is None:
            return 2.0  # off the -score scale, which never exceeds 0
        return -score(probs)

    best = -math.inf
    converged = 0
    skipped = 0
    for restart in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(restart,)))
        x0 = None
        for _ in range(_START_REDRAW_CAP):
            candidate = rng.uniform(-1.0, 1.0, size=n_params)
            if objective(candidate) <= 0.0:
                x0 = candidate
                break
        if x0 is None:
            skipped += 1
            continue
        result = minimize(objective, x0, method="Nelder-Mead", options=_NM_OPTIONS)
        if result.success:
            converged += 1
        value = -float(result.fun)
        if value > best:
            best = value
    if skipped == restarts:
        raise SingularStart(f"all {restarts} restarts drew singular frame operators")
    return best, converged


def accessible_info_oracle(
    ens: PyramidEnsemble,
    n_outcomes: int | None = None,
    restarts: int = 50,
    seed: int = 0,
    complex_mode: bool = False,
) -> OracleResult:
    """Brute-force search for the accessible information over unconstrained POVMs.

    Independent of the symmetric family: candidates are arbitrary rank-1
    POVMs (complex-valued ones in complex_mode).  Cost grows quickly with
    dimension; intended for N up to about 6.  Deterministic given
    (seed, restarts, n_outcomes).
    """
    if n_outcomes is None:
        n_outcomes = default_outcome_count(ens.dim, complex_mode)
    if n_outcomes < ens.dim:
        raise DomainError(
            f"n_outcomes must be at least the dimension {ens.dim}, got {n_outcomes}"
        )

    def score(probs: np.ndarray) -> float:
        # base-N mutual information, uniform prior; inlined for speed
        n_states = probs.shape[1]
        marg = probs.mean(axis=1)
        safe_m = np.where(marg > 0.0, marg, 1.0)
        safe_p = np.where(probs > 0.0, probs, 1.0)
        h_out = -np.sum(marg * np.log(safe_m))
        h_cond = -np.sum(probs * np.log(safe_p)) / n_states
        return (h_out - h_cond) / math.log(n_states)

    best, converged = _random_restart_search(ens, n_outcomes, restarts, seed, complex_mode, score)
    return OracleResult(
        i_best=best,
        n_outcomes=n_outcomes,
        restarts=restarts,
        seed=seed,
        converged_runs=converged,
    )


def max_success_oracle(ens: PyramidEnsemble, restarts: int = 50, seed: int = 0) -> float:
    """Best average guessing probability over unconstrained N-outcome POVMs.

    Outcome k is the guess "state k"; the searched maximum should match the
    square-root measurement's closed-form value (c+d)^2.
    """

    def score(probs: np.ndarray) -> float:
        return float(np.trace(probs)) / probs.shape[1]

    best, _ = _random_restart_search(ens, ens.dim, restarts, seed, False, score)
    return best


def compare_point(dim: int, gamma: float) -> SweepRecord:
    """Family comparison at one (dim, gamma) grid point."""
    ens = make_ensemble(dim, gamma)
    ims = optimize_ims(ens)
    a0, _, _ = symmetric_amplitudes(ens, 0.0)
    a_opt, _, _ = symmetric_amplitudes(ens, ims.s_opt)
    return SweepRecord(
        dim=dim,
        gamma=gamma,
        i_srm=ims.i_srm,
        i_ims=ims.i_ims,
        delta_i=ims.delta_i,
        s_opt=ims.s_opt,
        lambda_opt=ims.lambda_opt,
        p_srm=float(a0) ** 2,
        p_ims=float(a_opt) ** 2,
    )


def clamped_gammas(dim: int, grid: GridSpec) -> np.ndarray:
    """Grid points clamped into the valid open overlap interval for this dim.

    Points outside (-1/(N-1), 1) are moved to the nearest interior value at
    margin 1e-6; requested points inside the interval pass through unchanged,
    so dims sharing the same request share the same grid wherever valid.
    """
    lo, hi = gamma_bounds(dim)
    return np.clip(grid.points(), lo + CLAMP_MARGIN, hi - CLAMP_MARGIN)


def sweep(dims: Sequence[int], grid: GridSpec) -> list[SweepRecord]:
    """Comparison records for every (dim, gamma), dim ascending then gamma ascending."""
    records = []
    for dim in sorted(dims):
        for g in clamped_gammas(dim, grid):
            records.append(compare_point(dim, float(g)))
    return records
