import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyramid_info import (
    DomainError,
    channel,
    make_ensemble,
    edge_cosine,
    srm,
    symmetric_povm,
    to_dense,
    validate_povm,
)


@st.composite
def family_members(draw, max_dim=30):
    dim = draw(st.integers(2, max_dim))
    s = draw(st.floats(-2.0 / dim, 0.0, allow_nan=False))
    return symmetric_povm(dim, float(s))


def test_srm_is_family_origin():
    povm = srm(make_ensemble(7, 0.4))
    assert povm.shape == 0.0
    assert povm.axis_weight == 0.0


def test_srm_probabilities_match_inverse_sqrt_oracle():
    # oracle: dense rho^{-1/2} applied to dense states, then the Born rule
    ens = make_ensemble(3, 0.5)
    psi = ens.states()
    rho = psi @ psi.T / 3.0
    w, u = np.linalg.eigh(rho)
    rho_inv_sqrt = (u / np.sqrt(w)) @ u.T
    elements = [rho_inv_sqrt @ np.outer(psi[:, j], psi[:, j]) @ rho_inv_sqrt / 3.0 for j in range(3)]
    assert np.allclose(sum(elements), np.eye(3), atol=1e-12)

    probs = np.array([[psi[:, j] @ el @ psi[:, j] for j in range(3)] for el in elements])
    ch = channel(ens, srm(ens))
    assert probs[0, 0] == pytest.approx(ch.p_hit, abs=1e-12)
    assert probs[1, 0] == pytest.approx(ch.p_miss, abs=1e-12)
    assert ch.p_hit == pytest.approx(8.0 / 9.0, abs=1e-12)
    assert ch.p_miss == pytest.approx(1.0 / 18.0, abs=1e-12)

    # the SRM elements reduce to basis projectors in this embedding
    for j, el in enumerate(elements):
        assert np.allclose(el, np.outer(np.eye(3)[j], np.eye(3)[j]), atol=1e-12)


def test_family_axis_weight_values():
    assert symmetric_povm(3, 0.0).axis_weight == 0.0
    assert symmetric_povm(3, -1.0 / 3.0).axis_weight == pytest.approx(1.0, abs=1e-15)
    assert symmetric_povm(4, -2.0 / 4.0).axis_weight == pytest.approx(0.0, abs=5e-16)


@pytest.mark.parametrize("dim,s", [(3, 0.1), (3, -0.7), (5, 1e-9), (1, 0.0)])
def test_family_domain_rejected(dim, s):
    with pytest.raises(DomainError):
        symmetric_povm(dim, s)


def test_edge_cosine_values():
    assert edge_cosine(symmetric_povm(4, 0.0)) == 0.0
    assert edge_cosine(symmetric_povm(3, -1.0 / 3.0)) == pytest.approx(-0.5, abs=1e-12)
    # frozen from the dense normalized inner product of phi_1, phi_2 (= -17/83)
    assert edge_cosine(symmetric_povm(3, -0.1)) == pytest.approx(-0.20481927710843373, abs=1e-15)


def test_edge_cosine_matches_dense_oracle():
    dim, s = 3, -0.1
    phi = np.eye(dim) + s
    oracle = float(phi[0] @ phi[1]) / float(phi[0] @ phi[0])
    assert edge_cosine(symmetric_povm(dim, s)) == pytest.approx(oracle, abs=1e-15)


def test_to_dense_origin_gives_exact_projectors():
    dense = to_dense(symmetric_povm(3, 0.0))
    assert len(dense.elements) == 4
    eye = np.eye(3)
    for k in range(3):
        assert np.array_equal(dense.elements[k], np.outer(eye[k], eye[k]))
    assert np.array_equal(dense.elements[3], np.zeros((3, 3)))


def test_to_dense_completeness():
    dense = to_dense(symmetric_povm(3, -1.0 / 3.0))
    total = sum(dense.elements)
    assert float(np.linalg.norm(total - np.eye(3))) < 1e-12


def test_edge_element_trace():
    dense = to_dense(symmetric_povm(4, -0.25))
    for el in dense.elements[:4]:
        assert float(np.trace(el)) == pytest.approx(0.75, abs=1e-12)


def test_validate_povm_passes_family():
    report = validate_povm(to_dense(symmetric_povm(5, -0.2)))
    assert report.passed
    assert report.completeness_residual < 1e-12
    assert report.min_eigenvalue >= -1e-10


def test_validate_povm_flags_scaled_elements():
    dense = to_dense(symmetric_povm(3, -0.2))
    halved = type(dense)(elements=tuple(0.5 * el for el in dense.elements))
    report = validate_povm(halved)
    assert not report.passed
    assert report.completeness_residual == pytest.approx(math.sqrt(3.0) / 2.0, abs=1e-12)


@given(family_members())
@settings(max_examples=80)
def test_family_members_always_valid(povm):
    assert 0.0 <= povm.axis_weight <= 1.0
    assert edge_cosine(povm) <= 1e-15
    assert validate_povm(to_dense(povm)).passed
