"""Outcome channels and base-N mutual information.

Permutation symmetry collapses the outcome statistics of a family member to
three numbers: the probability a^2 of the edge outcome matching the sent
state, the probability b^2 of each of the N-1 other edges, and a
state-independent axis probability.  With t = c + N*d the Born amplitudes
are a = (c+d) + s*t on the matching edge and b = d + s*t elsewhere, and
p_axis = lam * t^2 / N.

With uniform prior 1/N the axis outcome's entropy terms cancel between
H(outcome) and H(outcome | state), leaving

    I = [-E ln(E/N) + a^2 ln(a^2) + (N-1) b^2 ln(b^2)] / ln(N),

with E = a^2 + (N-1) b^2 the total edge probability.  All entropies use
logarithms to base N, so I lies in [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._entropy import xlogx
from .ensemble import PyramidEnsemble
from .errors import DimensionMismatch
from .measurements import DensePovm, SymmetricPovm


@dataclass(frozen=True)
class SymmetricChannel:
    """Conditional outcome probabilities of a family member, by symmetry class."""

    dim: int
    p_hit: float
    p_miss: float
    p_axis: float


@dataclass(frozen=True)
class DenseChannel:
    """Full (n_outcomes, N) table of p(outcome | state)."""

    probs: np.ndarray


def symmetric_amplitudes(ens: PyramidEnsemble, s):
    """Born data (a, b, p_axis) at family parameter s; elementwise on arrays."""
    c, d, n = ens.comp_edge, ens.comp_flat, ens.dim
    t = c + n * d
    s = np.asarray(s, dtype=float)
    a = (c + d) + s * t
    b = d + s * t
    lam = np.maximum(0.0, 1.0 - (1.0 + n * s) ** 2)
    return a, b, lam * (t * t) / n


def channel(ens: PyramidEnsemble, povm: SymmetricPovm) -> SymmetricChannel:
    """Closed-form outcome channel; O(1) regardless of dimension."""
    if ens.dim != povm.dim:
        raise DimensionMismatch(f"ensemble dim {ens.dim} != povm dim {povm.dim}")
    a, b, p_axis = symmetric_amplitudes(ens, povm.shape)
    return SymmetricChannel(
        dim=ens.dim,
        p_hit=float(a) ** 2,
        p_miss=float(b) ** 2,
        p_axis=float(p_axis),
    )


def channel_dense(ens: PyramidEnsemble, povm: DensePovm) -> DenseChannel:
    """Born-rule table tr(Pi_k |psi_j><psi_j|) from explicit matrices."""
    if ens.dim != povm.dim:
        raise DimensionMismatch(f"ensemble dim {ens.dim} != povm dim {povm.dim}")
    psi = ens.states()
    probs = np.einsum("kab,aj,bj->kj", np.stack(povm.elements), psi, psi)
    return DenseChannel(probs=np.maximum(probs, 0.0))


def edge_channel_information(dim: int, p_hit, p_miss):
    """Base-dim mutual information of the symmetric channel, from its edge block.

    The axis outcome never appears: its conditional distribution is
    state-independent, so it cancels out of I exactly.  Works elementwise
    when p_hit/p_miss are arrays.
    """
    n = dim
    ph = np.asarray(p_hit, dtype=float)
    pm = np.asarray(p_miss, dtype=float)
    e = ph + (n - 1) * pm
    nats = -n * xlogx(e / n) + xlogx(ph) + (n - 1) * xlogx(pm)
    return nats / math.log(n)


def dense_information(probs: np.ndarray) -> float:
    """Base-N mutual information of an explicit outcome table, uniform prior 1/N."""
    p = np.asarray(probs, dtype=float)
    n_states = p.shape[1]
    h_outcomes = -np.sum(xlogx(p.mean(axis=1)))
    h_conditional = -np.sum(xlogx(p)) / n_states
    return float((h_outcomes - h_conditional) / math.log(n_states))


def mutual_information(ch: SymmetricChannel | DenseChannel) -> float:
    if isinstance(ch, SymmetricChannel):
        return float(edge_channel_information(ch.dim, ch.p_hit, ch.p_miss))
    return dense_information(ch.probs)


def success_probability(ch: SymmetricChannel) -> float:
    """Probability that the edge outcome names the sent state.

    The axis outcome is counted as "no guess"; see adjusted_success_probability
    for the variant that turns axis outcomes into uniform guesses.
    """
    return ch.p_hit


def adjusted_success_probability(ch: SymmetricChannel) -> float:
    """Success probability when axis outcomes fall back to a fixed guess."""
    return ch.p_hit + ch.p_axis / ch.dim
