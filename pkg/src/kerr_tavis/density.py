"""Reduced density matrices of the atoms and of the cavity field.

Atomic basis order: |uu>, |ud>, |du>, |dd>.  Matrices carry an optional
leading time axis.
"""
from __future__ import annotations

import numpy as np

from .amplitudes import AmplitudeTable


def atomic_density(tab: AmplitudeTable) -> np.ndarray:
    """rho_A[i, j] = <j-th field ket | i-th field ket>, e.g. rho_12 = <R|U>."""
    W = tab.components()
    return np.einsum("...im,...jm->...ij", W, W.conj())


def field_density(tab: AmplitudeTable) -> np.ndarray:
    """rho_F = |U><U| + |R><R| + |S><S| + |T><T| in the Fock basis 0..cutoff+2."""
    W = tab.components()
    return np.einsum("...im,...in->...mn", W, W.conj())


def index_sum_formulas(tab: AmplitudeTable) -> np.ndarray:
    """Same matrix assembled term by term from explicit index sums over the amplitudes.

    Kept as an independent check on the amplitude bookkeeping; production
    code uses :func:`atomic_density`.
    """
    K = tab.size
    pad = 4
    # b[n] with zero padding on both sides, addressed as bb(n)
    bext = np.zeros(K + 2 * pad)
    bext[pad : pad + tab.b.size] = tab.b

    def bb(n):
        return bext[n + pad]

    def amp(X):
        ext = np.zeros(X.shape[:-1] + (K + 2 * pad,), dtype=complex)
        ext[..., pad : pad + K] = X
        return lambda n: ext[..., n + pad]

    A, B, C, D = amp(tab.A), amp(tab.B), amp(tab.C), amp(tab.D)
    E, F, G, H = amp(tab.E), amp(tab.F), amp(tab.G), amp(tab.H)
    cj = np.conj
    n = np.arange(K)

    def s(expr):
        return np.sum(expr, axis=-1)

    r11 = s(bb(n) ** 2 * (abs(A(n)) ** 2 + abs(H(n - 2)) ** 2)
            + bb(n) * bb(n + 2) * A(n) * cj(H(n))
            + bb(n) * bb(n - 2) * cj(A(n - 2)) * H(n - 2))
    r22 = s(bb(n) ** 2 * (abs(B(n + 1)) ** 2 + abs(G(n - 1)) ** 2)
            + bb(n) * bb(n + 2) * B(n + 1) * cj(G(n + 1))
            + bb(n) * bb(n - 2) * cj(B(n - 1)) * G(n - 1))
    r44 = s(bb(n) ** 2 * (abs(D(n + 2)) ** 2 + abs(E(n)) ** 2)
            + bb(n) * bb(n + 2) * D(n + 2) * cj(E(n + 2))
            + bb(n) * bb(n - 2) * cj(D(n)) * E(n))
    r12 = s(bb(n) * bb(n - 1) * A(n) * cj(B(n))
            + bb(n) * bb(n - 3) * cj(B(n - 2)) * H(n - 2)
            + bb(n) * bb(n + 1) * A(n) * cj(G(n))
            + bb(n) * bb(n - 1) * cj(G(n - 2)) * H(n - 2))
    r14 = s(bb(n) * bb(n - 2) * A(n) * cj(D(n))
            + bb(n) * bb(n - 4) * cj(D(n - 2)) * H(n - 2)
            + bb(n) ** 2 * A(n) * cj(E(n))
            + bb(n) * bb(n - 2) * cj(E(n - 2)) * H(n - 2))
    r23 = s(bb(n) ** 2 * abs(B(n + 1)) ** 2
            + bb(n) * bb(n - 2) * cj(C(n - 1)) * G(n - 1)
            + bb(n) * bb(n + 2) * B(n + 1) * cj(F(n + 1))
            + bb(n) ** 2 * abs(F(n - 1)) ** 2)
    r24 = s(bb(n) * bb(n - 1) * B(n + 1) * cj(D(n + 1))
            + bb(n) * bb(n - 3) * cj(D(n - 1)) * G(n - 1)
            + bb(n) * bb(n + 1) * B(n + 1) * cj(E(n + 1))
            + bb(n) * bb(n - 1) * cj(E(n - 1)) * G(n - 1))

    rho = np.zeros(np.shape(r11) + (4, 4), dtype=complex)
    rho[..., 0, 0] = r11
    rho[..., 1, 1] = rho[..., 2, 2] = r22
    rho[..., 3, 3] = r44
    rho[..., 0, 1] = rho[..., 0, 2] = r12
    rho[..., 0, 3] = r14
    rho[..., 1, 2] = r23
    rho[..., 1, 3] = rho[..., 2, 3] = r24
    lower = np.conj(np.swapaxes(rho, -1, -2))
    iu = np.triu_indices(4, 1)
    rho[..., iu[1], iu[0]] = lower[..., iu[1], iu[0]]
    return rho
