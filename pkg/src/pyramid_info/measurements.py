"""The square-root measurement and the symmetric one-parameter POVM family.

A family member at shape parameter s in [-2/N, 0] has N rank-1 edge outcomes
built from phi_k = e_k + s*ones plus one outcome along the symmetry axis with
weight lam = 1 - (1 + N*s)^2.  Completeness holds by construction:

    sum_k phi_k phi_k^T = I + (2s + N s^2) * ones ones^T

and the axis element lam * (ones ones^T)/N cancels the rank-1 excess.  The
edges make an obtuse (or right) angle with each other everywhere on the
domain; s = 0 is the square-root measurement, whose elements reduce to the
basis projectors in the canonical embedding, and s = -2/N is its mirror
image through the hyperplane orthogonal to the axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ensemble import PyramidEnsemble
from .errors import DomainError

COMPLETENESS_TOL = 1e-10
PSD_TOL = -1e-10


@dataclass(frozen=True)
class SymmetricPovm:
    dim: int
    shape: float
    axis_weight: float


@dataclass(frozen=True)
class DensePovm:
    """Explicit matrix form, for validation at small N."""

    elements: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]


@dataclass(frozen=True)
class ValidationReport:
    completeness_residual: float
    min_eigenvalue: float
    passed: bool


def symmetric_povm(dim: int, s: float) -> SymmetricPovm:
    """Family member at shape parameter s; DomainError outside [-2/dim, 0]."""
    if dim < 2:
        raise DomainError(f"dim must be >= 2, got {dim}")
    if not (-2.0 / dim <= s <= 0.0):
        raise DomainError(
            f"shape parameter must lie in [-2/{dim}, 0] (axis weight would be negative), got {s:g}"
        )
    # roundoff at the mirror endpoint can leave lam at -1e-16; clamp to the invariant
    lam = max(0.0, 1.0 - (1.0 + dim * s) ** 2)
    return SymmetricPovm(dim=dim, shape=s, axis_weight=lam)


def srm(ens: PyramidEnsemble) -> SymmetricPovm:
    """The square-root measurement: the family origin s = 0.

    rho^{-1/2} psi_j is proportional to e_j in the canonical embedding, so
    the elements are exactly the basis projectors (right angles between the
    measurement edges, no axis outcome) for every gamma.
    """
    return symmetric_povm(ens.dim, 0.0)


def edge_cosine(povm: SymmetricPovm) -> float:
    """Cosine between two normalized measurement edges; <= 0 on the domain."""
    q = 2.0 * povm.shape + povm.dim * povm.shape * povm.shape
    return q / (1.0 + q)


def to_dense(povm: SymmetricPovm) -> DensePovm:
    """Explicit N+1 elements: the N edge outcomes, then the axis outcome.

    The axis element is materialized even when its weight is zero so every
    family member exposes a uniform outcome count.  Intended for N up to
    around 100; the fast path never needs matrices.
    """
    n, s = povm.dim, povm.shape
    eye = np.eye(n)
    if s == 0.0:
        edges = tuple(np.outer(eye[k], eye[k]) for k in range(n))
    else:
        phis = eye + s
        edges = tuple(np.outer(row, row) for row in phis)
    axis = povm.axis_weight / n * np.ones((n, n))
    return DensePovm(elements=(*edges, axis))


def validate_povm(povm: DensePovm) -> ValidationReport:
    """Completeness and positivity diagnostics; reports, never raises."""
    n = povm.dim
    total = np.zeros((n, n))
    for element in povm.elements:
        total = total + element
    residual = float(np.linalg.norm(total - np.eye(n)))
    min_eig = float(min(np.linalg.eigvalsh(element)[0] for element in povm.elements))
    return ValidationReport(
        completeness_residual=residual,
        min_eigenvalue=min_eig,
        passed=(residual <= COMPLETENESS_TOL) and (min_eig >= PSD_TOL),
    )
