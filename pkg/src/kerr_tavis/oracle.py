"""Brute-force reference: dense Hamiltonian on the truncated atoms x Fock space.

Nothing here uses the block solution.  The free term omega (n + J_z) is left
out; it commutes with everything else and only contributes a phase per
conserved excitation, the same picture the closed form is written in.
"""
from __future__ import annotations

import math

import numpy as np

from .states import ModelConfig

# single-atom basis order (up, down)
_SP = np.array([[0.0, 1.0], [0.0, 0.0]])
_SZ = np.diag([1.0, -1.0])
_I2 = np.eye(2)

J_PLUS = np.kron(_SP, _I2) + np.kron(_I2, _SP)
J_MINUS = J_PLUS.T.copy()
J_Z = 0.5 * (np.kron(_SZ, _I2) + np.kron(_I2, _SZ))


def fock_dim(config: ModelConfig) -> int:
    return config.cutoff + 3


def build_hamiltonian(config: ModelConfig, dim: int | None = None) -> np.ndarray:
    """Dense H = Delta J_z + f(chi, n) + J_- a^dag + J_+ a, atoms as the outer factor."""
    K = fock_dim(config) if dim is None else dim
    if K < 3:
        raise ValueError("need at least three Fock levels")
    n = np.arange(K, dtype=float)
    a = np.diag(np.sqrt(n[1:]), 1)
    kerr = np.diag(config.chi * n * (n - 1) + 2.0 * math.sqrt(config.chi) * n)
    H = (config.delta * np.kron(J_Z, np.eye(K)) + np.kron(np.eye(4), kerr)
         + np.kron(J_MINUS, a.T) + np.kron(J_PLUS, a))
    return H.astype(complex)


def excitation_operator(K: int) -> np.ndarray:
    return np.kron(np.eye(4), np.diag(np.arange(K, dtype=float))) + np.kron(J_Z, np.eye(K))


def initial_state(config: ModelConfig, dim: int | None = None) -> np.ndarray:
    K = fock_dim(config) if dim is None else dim
    field = np.zeros(K)
    field[: config.b.size] = config.b
    atoms = np.array([config.atoms.gamma1, 0.0, 0.0, config.atoms.gamma4])
    return np.kron(atoms, field)


class Propagator:
    """exp(-i H t) through one dense Hermitian eigendecomposition."""

    def __init__(self, H: np.ndarray):
        self.E, self.V = np.linalg.eigh(H)

    def evolve(self, psi0: np.ndarray, t) -> np.ndarray:
        c = self.V.conj().T @ psi0
        ph = np.exp(-1j * np.multiply.outer(np.asarray(t, dtype=float), self.E))
        return (ph * c) @ self.V.T


def evolve(psi0: np.ndarray, H: np.ndarray, t) -> np.ndarray:
    return Propagator(H).evolve(psi0, t)


class Oracle:
    """Reference evolution for one configuration."""

    def __init__(self, config: ModelConfig):
        self.config = config
        self.K = fock_dim(config)
        self.H = build_hamiltonian(config)
        self.psi0 = initial_state(config)
        self._prop = Propagator(self.H)

    def state(self, t) -> np.ndarray:
        return self._prop.evolve(self.psi0, t)

    def components(self, t) -> np.ndarray:
        """Field kets attached to each atomic basis state, shape (..., 4, K)."""
        psi = self.state(t)
        return psi.reshape(psi.shape[:-1] + (4, self.K))

    def atomic_density(self, t) -> np.ndarray:
        W = self.components(t)
        return np.einsum("...im,...jm->...ij", W, W.conj())

    def field_density(self, t) -> np.ndarray:
        W = self.components(t)
        return np.einsum("...im,...in->...mn", W, W.conj())


def align_phase(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Return ``b`` rotated by the global phase that matches its largest entry to ``a``."""
    k = int(np.argmax(np.abs(b)))
    if abs(b[k]) == 0.0:
        return b
    ph = a[k] / b[k]
    return b * (ph / abs(ph)) if ph != 0 else b


def compare(psi_closed: np.ndarray, psi_oracle: np.ndarray) -> float:
    """Max componentwise deviation after global-phase alignment."""
    if psi_closed.shape != psi_oracle.shape:
        raise ValueError(f"mismatched cutoffs: {psi_closed.shape} vs {psi_oracle.shape}")
    return float(np.max(np.abs(psi_closed - align_phase(psi_closed, psi_oracle))))
