"""Symmetric pyramid ensembles: N unit vectors with one common pairwise overlap.

An ensemble is fixed by (N, gamma): N pure states in an N-dimensional real
inner-product space with <psi_i|psi_j> = gamma for every i != j, sent with
uniform prior 1/N.  The Gram matrix (1-gamma)*I + gamma*J (J = all ones) has
the closed-form principal square root

    sqrt(1-gamma)*I + [(sqrt(1+(N-1)*gamma) - sqrt(1-gamma)) / N] * J,

so the canonical embedding psi_j = G^{1/2} e_j gives every state the
component form c*delta_kj + d.  All downstream formulas work with (c, d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._entropy import xlogx
from .errors import DomainError


@dataclass(frozen=True)
class PyramidEnsemble:
    """A pyramid ensemble in its canonical basis embedding.

    comp_edge is the coefficient c each state puts on its own basis
    direction, comp_flat the uniform coefficient d it puts on all of them.
    """

    dim: int
    gamma: float
    comp_edge: float
    comp_flat: float

    def states(self) -> np.ndarray:
        """Dense state matrix with column j = psi_j = c*e_j + d*ones."""
        psi = np.full((self.dim, self.dim), self.comp_flat)
        psi[np.diag_indices(self.dim)] += self.comp_edge
        return psi


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of the average state rho = Gram/N.

    axis_eigenvalue sits on the symmetry axis (multiplicity 1),
    flat_eigenvalue on its orthogonal complement (multiplicity N-1).
    """

    axis_eigenvalue: float
    flat_eigenvalue: float


def gamma_bounds(dim: int) -> tuple[float, float]:
    """Open interval of overlaps keeping the Gram matrix positive definite."""
    return (-1.0 / (dim - 1), 1.0)


def make_ensemble(dim: int, gamma: float) -> PyramidEnsemble:
    """Build the ensemble for (dim, gamma), rejecting degenerate geometries.

    Both interval endpoints are rejected rather than clamped: gamma = 1 means
    identical states, gamma = -1/(N-1) a flat pyramid, and neither has a
    well-defined discrimination structure.
    """
    if dim < 2:
        raise DomainError(f"dim must be >= 2, got {dim}")
    lo, hi = gamma_bounds(dim)
    if not (lo < gamma < hi):
        raise DomainError(
            f"gamma must lie strictly inside ({lo:g}, {hi:g}) for dim={dim}, got {gamma:g}"
        )
    c = math.sqrt(1.0 - gamma)
    d = (math.sqrt(1.0 + (dim - 1) * gamma) - c) / dim
    return PyramidEnsemble(dim=dim, gamma=gamma, comp_edge=c, comp_flat=d)


def spectrum(ens: PyramidEnsemble) -> Spectrum:
    n = ens.dim
    return Spectrum(
        axis_eigenvalue=(1.0 + (n - 1) * ens.gamma) / n,
        flat_eigenvalue=(1.0 - ens.gamma) / n,
    )


def holevo_chi(ens: PyramidEnsemble) -> float:
    """Entropy of the average state in base-N units.

    For an ensemble of pure states the conditional-entropy term vanishes, so
    this is the accessible-information cap.  All logarithms are taken to
    base N, which places the value in [0, 1].
    """
    n = ens.dim
    spec = spectrum(ens)
    nats = -(xlogx(spec.axis_eigenvalue) + (n - 1) * xlogx(spec.flat_eigenvalue))
    return float(nats / math.log(n))


def axis_overlap(ens: PyramidEnsemble) -> float:
    """Squared overlap of the symmetry axis with any edge state.

    The axis is the normalized all-ones vector; by symmetry the value
    (1 + (N-1)*gamma)/N is the same for every state of the pyramid.
    """
    return (1.0 + (ens.dim - 1) * ens.gamma) / ens.dim
