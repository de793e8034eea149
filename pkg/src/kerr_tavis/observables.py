"""Collective spin moments, squeezing parameters and atomic inversion.

J_+- = sigma_+-^(1) + sigma_+-^(2) and J_z = (sigma_z^(1) + sigma_z^(2)) / 2,
evaluated from the 4x4 reduced density matrix (optionally batched).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Moments:
    jminus: np.ndarray
    jplus: np.ndarray
    jz: np.ndarray
    jplus2: np.ndarray
    jminus2: np.ndarray
    anticomm: np.ndarray  # <J+ J- + J- J+>

    @property
    def jx(self):
        return self.jminus.real

    @property
    def jy(self):
        return -self.jminus.imag

    @property
    def jx2(self):
        return 0.25 * (2.0 * self.jplus2.real + self.anticomm)

    @property
    def jy2(self):
        return 0.25 * (self.anticomm - 2.0 * self.jplus2.real)

    @property
    def var_x(self):
        return self.jx2 - self.jx**2

    @property
    def var_y(self):
        return self.jy2 - self.jy**2


def collective_expectations(rho: np.ndarray) -> Moments:
    r = lambda i, j: rho[..., i - 1, j - 1]  # noqa: E731  1-based like rho_ij
    jm = r(1, 2) + r(1, 3) + r(2, 4) + r(3, 4)
    jz = (r(1, 1) - r(4, 4)).real
    jp2 = 2.0 * r(4, 1)
    jm2 = 2.0 * r(1, 4)
    anti = (2.0 * (r(1, 1) + r(2, 2) + r(3, 3) + r(4, 4)) + 2.0 * (r(2, 3) + r(3, 2))).real
    return Moments(jm, np.conj(jm), jz, jp2, jm2, anti)


@dataclass(frozen=True)
class Squeezing:
    F1: np.ndarray
    F2: np.ndarray
    F1_literal: np.ndarray
    F2_literal: np.ndarray


def squeezing_parameters(rho: np.ndarray) -> Squeezing:
    """F1 = (dJx)^2 - |<Jz>|/2 and F2 = (dJy)^2 - |<Jz>|/2, negative means squeezed.

    The ``_literal`` values replace <Jx^2> and <Jy^2> by 1/2, which is what the
    closed-form expressions in terms of <J+ +- J-> amount to.
    """
    m = collective_expectations(rho)
    half_jz = 0.5 * np.abs(m.jz)
    F1 = m.var_x - half_jz
    F2 = m.var_y - half_jz
    F1_lit = 0.5 * (1.0 - 2.0 * m.jx**2 - np.abs(m.jz))
    F2_lit = 0.5 * (1.0 - 2.0 * m.jy**2 - np.abs(m.jz))
    return Squeezing(F1, F2, F1_lit, F2_lit)


def inversion(rho: np.ndarray):
    return (rho[..., 0, 0] - rho[..., 3, 3]).real
