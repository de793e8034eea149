import math

import numpy as np
import pytest

from kerr_tavis import ModelConfig, excited_group
from kerr_tavis.oracle import (Oracle, build_hamiltonian, compare, evolve, excitation_operator,
                               initial_state)


def test_single_block_spectrum():
    cfg = ModelConfig.create(0.5, 5)
    K = 3
    H = build_hamiltonian(cfg, dim=K)
    sym = np.zeros(4 * K)
    sym[[K + 1, 2 * K + 1]] = 1 / math.sqrt(2)
    basis = np.zeros((4 * K, 3))
    basis[0, 0], basis[:, 1], basis[3 * K + 2, 2] = 1, sym, 1
    ev = np.linalg.eigvalsh(basis.T @ H @ basis)
    np.testing.assert_allclose(ev, [-math.sqrt(6), 0, math.sqrt(6)], atol=1e-14)


@pytest.mark.parametrize("chi,delta", [(0, 0), (0.5, 5), (5, -3)])
def test_commutes_with_excitation_number(chi, delta):
    cfg = ModelConfig.create(0.5, 5, chi=chi, delta=delta)
    H = build_hamiltonian(cfg)
    N = excitation_operator(cfg.cutoff + 3)
    assert np.max(np.abs(H @ N - N @ H)) < 1e-12


def test_hamiltonian_is_hermitian(small_cfg):
    H = build_hamiltonian(small_cfg)
    assert np.array_equal(H, H.conj().T)


def test_ground_vacuum_column():
    cfg = ModelConfig.create(0.5, 5, chi=2, delta=3)
    K = cfg.cutoff + 3
    H = build_hamiltonian(cfg)
    col = H[:, 3 * K]  # |dd, 0>
    expected = np.zeros(4 * K, complex)
    expected[3 * K] = -3.0
    np.testing.assert_allclose(col, expected, atol=1e-15)


def test_evolve_identity_at_zero(small_cfg):
    psi0 = initial_state(small_cfg)
    np.testing.assert_allclose(evolve(psi0, build_hamiltonian(small_cfg), 0.0), psi0, atol=1e-14)


def test_single_block_matches_excited_group():
    cfg = ModelConfig.create(0.5, 5, gamma1=1, gamma4=0)
    K = cfg.cutoff + 3
    psi0 = np.zeros(4 * K, complex)
    psi0[0] = 1
    t = 2.2
    psi = evolve(psi0, build_hamiltonian(cfg), t)
    A, B, D = excited_group(0, t, cfg)
    np.testing.assert_allclose([psi[0], psi[K + 1], psi[2 * K + 1], psi[3 * K + 2]], [A, B, B, D], atol=1e-10)


def test_norm_drift(fig1_cfg):
    psi = Oracle(fig1_cfg).state(np.array([0.5, 5, 20]))
    assert np.max(np.abs(np.linalg.norm(psi, axis=1) - 1)) < 1e-12


def test_compare_behaviour(small_cfg):
    psi = Oracle(small_cfg).state(1.0)
    assert compare(psi, psi) == 0
    assert compare(psi, np.exp(1.1j) * psi) < 1e-15
    with pytest.raises(ValueError, match="mismatched"):
        compare(psi, psi[:-1])
