import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kerr_tavis.oracle import build_hamiltonian
from kerr_tavis.spectrum import (DegenerateBlock, Group, block_eigen, branch_parameters,
                                 cubic_invariants, eigenfrequencies, nonlinear_shift)
from kerr_tavis.states import ModelConfig


def test_nonlinear_shift_examples():
    assert nonlinear_shift(0.5, 2) == pytest.approx(1 + 2 * math.sqrt(2))
    assert nonlinear_shift(3.3, 0) == 0
    assert nonlinear_shift(5, 1) == pytest.approx(2 * math.sqrt(5))


def test_branch_parameters_resonant_and_detuned():
    bp = branch_parameters(ModelConfig.create(0.5, 5), 0, Group.EXCITED)
    assert bp.alphas == (0, 0, 0) and (bp.Gamma1, bp.Gamma2) == (1, math.sqrt(2))
    bp = branch_parameters(ModelConfig.create(0.5, 5, delta=10), 0, Group.EXCITED)
    assert bp.alphas == (10, 0, -10)


def test_ground_block_matches_oracle_hamiltonian():
    cfg = ModelConfig.create(0.5, 5, chi=0.5)
    bp = branch_parameters(cfg, 3, Group.GROUND)
    f = lambda k: nonlinear_shift(0.5, k)  # noqa: E731
    assert bp.alphas == pytest.approx((f(3), f(2), f(1)))
    assert (bp.Gamma1, bp.Gamma2) == pytest.approx((math.sqrt(3), math.sqrt(2)))
    K = cfg.cutoff + 3
    H = build_hamiltonian(cfg)
    dd3 = 3 * K + 3
    sym2 = np.zeros(4 * K)
    sym2[[1 * K + 2, 2 * K + 2]] = 1 / math.sqrt(2)
    uu1 = 0 * K + 1
    basis = np.zeros((4 * K, 3))
    basis[dd3, 0], basis[:, 1], basis[uu1, 2] = 1, sym2, 1
    np.testing.assert_allclose(basis.T @ H @ basis, bp.matrix(), atol=1e-12)


def test_ground_small_blocks_raise():
    cfg = ModelConfig.create(0.5, 5)
    for n in (0, 1):
        with pytest.raises(DegenerateBlock):
            branch_parameters(cfg, n, Group.GROUND)


def test_cubic_invariants_resonant():
    bp = branch_parameters(ModelConfig.create(0.5, 5), 0, Group.EXCITED)
    assert cubic_invariants(bp) == pytest.approx((0, -6, 0))


def test_cubic_invariants_detuned_match_vieta():
    bp = branch_parameters(ModelConfig.create(0.5, 5, delta=10), 0, Group.EXCITED)
    X1, X2, X3 = cubic_invariants(bp)
    eta = -np.linalg.eigvalsh(bp.matrix())
    assert X1 == pytest.approx(-eta.sum(), abs=1e-12)
    assert X2 == pytest.approx(eta[0] * eta[1] + eta[0] * eta[2] + eta[1] * eta[2], abs=1e-12)
    assert X3 == pytest.approx(-np.prod(eta), abs=1e-12)
    assert (X1, X2) == pytest.approx((0, -106))


def test_eigenfrequencies_simple():
    eig = eigenfrequencies(0, -6, 0)
    np.testing.assert_allclose(np.sort(eig.eta), [-math.sqrt(6), 0, math.sqrt(6)], atol=1e-14)


def test_eigenfrequencies_residual():
    eta = eigenfrequencies(0, -106, 60).eta
    assert np.all(np.abs(eta**3 - 106 * eta + 60) < 1e-9)


@pytest.mark.parametrize("X", [(0, 0, 0), (-3, 3, -1)])
def test_eigenfrequencies_repeated_root(X):
    with pytest.raises(DegenerateBlock):
        eigenfrequencies(*X)


@settings(max_examples=60, deadline=None)
@given(chi=st.floats(0, 6), delta=st.floats(-12, 12), n=st.integers(0, 120),
       group=st.sampled_from(list(Group)))
def test_block_roots_are_minus_block_energies(chi, delta, n, group):
    if group is Group.GROUND and n < 2:
        return
    bp = branch_parameters(ModelConfig.create(0.5, 5, chi=chi, delta=delta), n, group)
    eig, c = block_eigen(bp)
    ref = np.sort(-np.linalg.eigvalsh(bp.matrix()))
    scale = max(1.0, np.max(np.abs(ref)))
    np.testing.assert_allclose(np.sort(eig.eta - c), ref, atol=1e-10 * scale)
    # Vieta on the shifted cubic
    assert -eig.eta.sum() == pytest.approx(eig.X1, abs=1e-9 * scale)
