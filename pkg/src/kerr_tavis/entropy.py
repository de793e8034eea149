"""Von Neumann entropy of the atomic pair.

Production route: Hermitian eigensolver.  A second route solves the quartic
characteristic polynomial in closed form (Ferrari), used for cross-checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectrum import DegenerateBlock, eigenfrequencies

HERMITIAN_TOL = 1e-9
PSD_TOL = 1e-9


@dataclass(frozen=True)
class QuarticCoefficients:
    """pi^4 + c3 pi^3 + c2 pi^2 + c1 pi + c0 = 0."""

    c0: float
    c1: float
    c2: float
    c3: float

    def __call__(self, x):
        return (((x + self.c3) * x + self.c2) * x + self.c1) * x + self.c0


def _elements(rho):
    r = lambda i, j: rho[i - 1, j - 1]  # noqa: E731
    r11, r22, r44 = r(1, 1).real, r(2, 2).real, r(4, 4).real
    return r11, r22, r44, r(1, 2), r(1, 4), r(2, 3), r(2, 4)


def quartic_coefficients(rho: np.ndarray) -> QuarticCoefficients:
    """Characteristic polynomial of an atom-exchange symmetric rho_A.

    Requires rho_22 = rho_33, rho_12 = rho_13, rho_24 = rho_34.  c3 and c2 are
    the standard expansion; c1 and c0 carry the corrected weights on the
    Re(rho_23) and Re(rho_41 rho_12 rho_24) terms (see
    :func:`literal_quartic_coefficients`).
    """
    r11, r22, r44, r12, r14, r23, r24 = _elements(rho)
    a12, a14, a23, a24 = abs(r12) ** 2, abs(r14) ** 2, abs(r23) ** 2, abs(r24) ** 2
    re23 = r23.real
    trip = (np.conj(r14) * r12 * r24).real  # Re(rho_41 rho_12 rho_24)
    c3 = -(r11 + 2 * r22 + r44)
    c2 = -a14 - 2 * a24 - 2 * a12 - a23 + 2 * r22 * (r11 + r44) + r22**2 + r11 * r44
    c1 = (2 * a14 * r22 + 2 * a24 * (r11 + r22) + 2 * a12 * (r22 + r44)
          - r22**2 * (r11 + r44) - 2 * r11 * r22 * r44
          - 2 * re23 * (a24 + a12) - 4 * trip + a23 * (r11 + r44))
    c0 = (a14 * a23 - r22 * r22 * a14 - r11 * r22 * a24
          - r44 * r22 * a12 - r11 * r44 * a23 - r22 * r44 * a12
          + r11 * r22 * r22 * r44 - r11 * r22 * a24
          + 2 * (r11 * a24 + r44 * a12) * re23
          + 2 * (2 * r22 - 2 * re23) * trip)
    return QuarticCoefficients(float(c0), float(c1), float(c2), float(c3))


def literal_quartic_coefficients(rho: np.ndarray) -> QuarticCoefficients:
    """c0..c3 in the commonly quoted expanded form, kept verbatim.

    These agree with the true characteristic polynomial only when
    rho_12 = rho_24 = 0 (or Re rho_23 and the triple product vanish together).
    """
    r11, r22, r44, r12, r14, r23, r24 = _elements(rho)
    r33 = r22
    a12, a14, a23, a24 = abs(r12) ** 2, abs(r14) ** 2, abs(r23) ** 2, abs(r24) ** 2
    re23 = r23.real
    trip = (np.conj(r14) * r12 * r24).real
    c3 = -r11 - r22 - r33 - r44
    c2 = -a14 - 2 * a24 - 2 * a12 - a23 + 2 * r22 * (r11 + r44) + r22**2 + r11 * r44
    c1 = (2 * a14 * r22 + 2 * a24 * (r11 + r22) + 2 * a12 * (r22 + r44)
          - r22**2 * (r11 + r44) - 2 * r11 * r22 * r44
          - re23 * (a24 + a12) - 2 * trip + a23 * (r11 + r44))
    c0 = (a14 * a23 - r22 * r33 * a14 - r11 * r33 * a24
          - r44 * r22 * a12 - r11 * r44 * a23 - r33 * r44 * a12
          + r11 * r22 * r33 * r44 - r11 * r22 * a24
          + (r11 * a24 + r44 * a12) * re23
          + (r22 + r33 - re23) * trip)
    return QuarticCoefficients(float(c0), float(c1), float(c2), float(c3))


def eigenvalues_numeric(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian density matrix, descending, clamped to [0, 1]."""
    rho = np.asarray(rho)
    dev = np.max(np.abs(rho - np.conj(np.swapaxes(rho, -1, -2))))
    if dev > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (deviation {dev:.2e})")
    w = np.linalg.eigvalsh(rho)[..., ::-1]
    return clamp_spectrum(w)


def clamp_spectrum(w: np.ndarray) -> np.ndarray:
    if np.any(w < -PSD_TOL) or np.any(w > 1 + PSD_TOL):
        raise ValueError(f"eigenvalues outside [0, 1] beyond tolerance: {w}")
    return np.clip(w, 0.0, 1.0)


class InconsistentResolvent(ArithmeticError):
    pass


def _resolvent_root(c: QuarticCoefficients) -> float:
    """Largest root w = f^2 of the resolvent cubic of the depressed quartic."""
    a, b, cc, d = c.c3, c.c2, c.c1, c.c0
    p = b - 3 * a * a / 8
    q = cc - a * b / 2 + a**3 / 8
    r = d - a * cc / 4 + a * a * b / 16 - 3 * a**4 / 256
    # w^3 + 2p w^2 + (p^2 - 4r) w - q^2 = 0, roots (y_i + y_j)^2 >= 0
    try:
        w = np.max(eigenfrequencies(2 * p, p * p - 4 * r, -q * q).eta)
    except DegenerateBlock:
        w = -2 * p / 3  # triple root
    return w


def eigenvalues_closed_form(c: QuarticCoefficients) -> np.ndarray:
    """Four roots of the quartic by Ferrari's construction, descending.

    f is the square root of the largest resolvent-cubic root.  Raises
    InconsistentResolvent when f vanishes (z4 undefined).
    """
    w = _resolvent_root(c)
    if not w > 1e-14:
        raise InconsistentResolvent(f"resolvent root {w!r} gives f = 0")
    f = math.sqrt(w)
    z3 = -2 * c.c2 + 0.75 * c.c3**2 - f * f
    z4 = (8 * c.c1 - 4 * c.c2 * c.c3 + c.c3**3) / (4 * f)

    def V(s):
        return math.sqrt(max(0.0, z3 + (-1) ** s * z4))

    def U(s):
        return -c.c3 / 2 + (-1) ** s * f

    pis = [(U(s) + (-1) ** s * V(s + 1)) / 2 for s in (1, 2)]
    # s = 3, 4 pair with V_{s+1}; pairing with V_{s+2} mixes the two Ferrari branches
    pis += [(U(s) + (-1) ** (s + 1) * V(s + 1)) / 2 for s in (3, 4)]
    return np.sort(np.array(pis))[::-1]


def von_neumann_entropy(spec: np.ndarray):
    """-sum pi ln pi over the last axis, with 0 ln 0 = 0."""
    p = np.asarray(spec, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(p > 0, -p * np.log(np.where(p > 0, p, 1.0)), 0.0)
    return np.sum(terms, axis=-1)


def atomic_entropy(rho: np.ndarray):
    return von_neumann_entropy(eigenvalues_numeric(rho))
