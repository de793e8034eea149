"""Time-dependent amplitudes of the two block families and the full wave function.

A seed |uu, n> evolves inside span{|uu, n>, (|ud> + |du>)|n+1>, |dd, n+2>} with
amplitudes (A_n, B_{n+1}, D_{n+2}); a seed |dd, n> inside
span{|dd, n>, (|ud> + |du>)|n-1>, |uu, n-2>} with (E_n, G_{n-1}, H_{n-2}).
The middle amplitude multiplies the *unnormalized* symmetric ket, so a block
carries probability |seed|^2 + 2|mid|^2 + |far|^2.

Every amplitude is stored as a sum of three phasors w_k exp(i eta_k t); the
spectral data are computed once per configuration, so a time sweep only
evaluates exponentials.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .spectrum import (BranchParams, DegenerateBlock, EigenTriple, Group,
                       block_eigen, branch_parameters, nonlinear_shift)
from .states import ModelConfig


@dataclass(frozen=True)
class BlockSpectrum:
    """Phasor expansion of one block: amplitude_j(t) = sum_k w_j[k] exp(i eta[k] t)."""

    eta: np.ndarray
    seed: np.ndarray
    mid: np.ndarray
    far: np.ndarray

    def evaluate(self, t):
        ph = np.exp(1j * np.multiply.outer(np.asarray(t, dtype=float), self.eta))
        return ph @ self.seed, ph @ self.mid, ph @ self.far


def initial_weights(gamma: complex, bp: BranchParams, eig: EigenTriple) -> np.ndarray:
    """Partial-fraction weights D^k(0) = 2 gamma Gamma1 Gamma2 / ((eta_k - eta_r)(eta_k - eta_s))."""
    eta = eig.eta
    denom = np.array([(eta[k] - eta[(k + 1) % 3]) * (eta[k] - eta[(k + 2) % 3])
                      for k in range(3)])
    if np.any(denom == 0.0):
        raise DegenerateBlock("repeated eigenfrequency in initial weights")
    return 2.0 * gamma * bp.Gamma1 * bp.Gamma2 / denom


def closed_form_block(gamma: complex, bp: BranchParams) -> BlockSpectrum:
    eig, c = block_eigen(bp)
    sb = bp.shifted(c)
    eta = eig.eta
    Dk = initial_weights(gamma, sb, eig)
    far = Dk
    mid = -Dk * (eta + sb.alpha3) / (2.0 * sb.Gamma2)
    seed = Dk * ((eta + sb.alpha2) * (eta + sb.alpha3) - 2.0 * sb.Gamma2**2) / (
        2.0 * sb.Gamma1 * sb.Gamma2)
    return BlockSpectrum(eta - c, seed, mid, far)


def direct_block(gamma: complex, H: np.ndarray) -> BlockSpectrum:
    """Phasor expansion from explicit diagonalization of a 1-, 2- or 3-level block.

    ``H`` is written in the normalized basis (seed, symmetric, partner).
    """
    d = H.shape[0]
    c = np.trace(H).real / d
    E, V = np.linalg.eigh(H - c * np.eye(d))
    w = gamma * V * V[0].conj()  # w[j, k] = gamma V_jk V_0k^*
    pad = np.zeros((3, 3), dtype=complex)
    pad[:d, :d] = w
    eta = np.zeros(3)
    eta[:d] = -(E + c)
    return BlockSpectrum(eta, pad[0], pad[1] / math.sqrt(2), pad[2])


def _ground_small(config: ModelConfig, n: int) -> np.ndarray:
    delta, chi = config.delta, config.chi
    if n == 0:
        return np.array([[-delta + nonlinear_shift(chi, 0)]])
    g = math.sqrt(2) * math.sqrt(n)
    return np.array([[-delta + nonlinear_shift(chi, 1), g],
                     [g, nonlinear_shift(chi, 0)]])


def block_spectrum(config: ModelConfig, n: int, group: Group) -> BlockSpectrum:
    gamma = config.atoms.gamma1 if group is Group.EXCITED else config.atoms.gamma4
    try:
        bp = branch_parameters(config, n, group)
    except DegenerateBlock:
        return direct_block(gamma, _ground_small(config, n))
    try:
        return closed_form_block(gamma, bp)
    except DegenerateBlock:
        return direct_block(gamma, bp.matrix())


def excited_group(n: int, t, config: ModelConfig):
    """(A_n, B_{n+1}, D_{n+2}) at Rabi angle ``t``; C_{n+1} equals B_{n+1}."""
    return block_spectrum(config, n, Group.EXCITED).evaluate(t)


def ground_group(n: int, t, config: ModelConfig):
    """(E_n, G_{n-1}, H_{n-2}) at Rabi angle ``t``; F_{n-1} equals G_{n-1}."""
    return block_spectrum(config, n, Group.GROUND).evaluate(t)


@dataclass(frozen=True)
class AmplitudeTable:
    """Wave function at one time (or a batch of times along a leading axis).

    Arrays are indexed by photon number m = 0..cutoff+2, following the
    subscripts of the amplitudes: ``B[m]`` is B_m, produced by the seed
    |uu, m-1>; ``H[m]`` is H_m, produced by the seed |dd, m+2>; and so on.
    Entries with no producing seed are zero.
    """

    t: float | np.ndarray
    b: np.ndarray
    A: np.ndarray
    B: np.ndarray
    D: np.ndarray
    E: np.ndarray
    G: np.ndarray
    H: np.ndarray

    @property
    def C(self) -> np.ndarray:
        return self.B

    @property
    def F(self) -> np.ndarray:
        return self.G

    @property
    def size(self) -> int:
        return self.A.shape[-1]

    def components(self) -> np.ndarray:
        """Field kets (U, R, S, T) attached to |uu>, |ud>, |du>, |dd>, shape (..., 4, K)."""
        K = self.size
        bp = np.zeros(K + 2)
        bp[: self.b.size] = self.b
        bm = np.concatenate([[0.0, 0.0], bp])  # bm[m + 2] = b_m, zero for m < 0
        m = np.arange(K)
        U = bp[m] * self.A + bp[m + 2] * self.H
        R = bm[m + 1] * self.B + bp[m + 1] * self.G
        T = bm[m] * self.D + bp[m] * self.E
        return np.stack([U, R, R, T], axis=-2)

    def joint_vector(self) -> np.ndarray:
        """Flattened state over atomic index (outer) x photon number (inner)."""
        W = self.components()
        return W.reshape(W.shape[:-2] + (-1,))

    def norm(self):
        W = self.components()
        return np.sum(np.abs(W) ** 2, axis=(-2, -1))


class Dynamics:
    """Cached spectral data for every block of one configuration."""

    def __init__(self, config: ModelConfig):
        self.config = config
        N = config.cutoff
        self.exc = [block_spectrum(config, n, Group.EXCITED) for n in range(N + 1)]
        self.gnd = [block_spectrum(config, n, Group.GROUND) for n in range(N + 1)]
        self._eta_exc = np.array([s.eta for s in self.exc])
        self._eta_gnd = np.array([s.eta for s in self.gnd])
        self._w_exc = np.stack([[s.seed, s.mid, s.far] for s in self.exc])  # (N+1, 3, 3)
        self._w_gnd = np.stack([[s.seed, s.mid, s.far] for s in self.gnd])

    @staticmethod
    def _eval(eta, w, t):
        ph = np.exp(1j * np.asarray(t, dtype=float)[..., None, None] * eta)  # (..., N+1, 3)
        return np.einsum("...nk,njk->...jn", ph, w)  # (..., 3, N+1)

    def table(self, t) -> AmplitudeTable:
        N = self.config.cutoff
        K = N + 3
        exc = self._eval(self._eta_exc, self._w_exc, t)
        gnd = self._eval(self._eta_gnd, self._w_gnd, t)
        shape = exc.shape[:-2] + (K,)
        A, B, D, E, G, H = (np.zeros(shape, dtype=complex) for _ in range(6))
        A[..., : N + 1] = exc[..., 0, :]
        B[..., 1 : N + 2] = exc[..., 1, :]
        D[..., 2 : N + 3] = exc[..., 2, :]
        E[..., : N + 1] = gnd[..., 0, :]
        G[..., :N] = gnd[..., 1, 1:]
        H[..., : N - 1] = gnd[..., 2, 2:]
        return AmplitudeTable(t, np.asarray(self.config.b), A, B, D, E, G, H)


@functools.lru_cache(maxsize=16)
def dynamics(config: ModelConfig) -> Dynamics:
    return Dynamics(config)


def state_vector(t, config: ModelConfig) -> AmplitudeTable:
    """Amplitude table at Rabi angle ``t`` (scalar or array of times)."""
    return dynamics(config).table(t)
