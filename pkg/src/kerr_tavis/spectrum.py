"""Per-block energies and the trigonometric cubic solution.

Each initial basis state |uu, n> (or |dd, n>) couples to a closed three-level
ladder.  The block frequencies eta_k are the roots of

    eta^3 + X1 eta^2 + X2 eta + X3 = 0,

i.e. the eigenvalues of minus the block Hamiltonian, so that amplitudes carry
the phases exp(+i eta_k t).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .states import ModelConfig

ACOS_CLAMP = 1e-12
DISC_TOL = 1e-12
ROOT_SEP = 1e-7


class Group(enum.Enum):
    EXCITED = "excited"  # seeded by gamma1 |uu, n>
    GROUND = "ground"    # seeded by gamma4 |dd, n>


class DegenerateBlock(ValueError):
    """Block whose spectrum cannot be handled by the closed form."""


@dataclass(frozen=True)
class BranchParams:
    alpha1: float
    alpha2: float
    alpha3: float
    Gamma1: float
    Gamma2: float
    group: Group
    n: int

    @property
    def alphas(self) -> tuple[float, float, float]:
        return self.alpha1, self.alpha2, self.alpha3

    def shifted(self, c: float) -> "BranchParams":
        """Same block with every diagonal energy lowered by ``c``."""
        return BranchParams(self.alpha1 - c, self.alpha2 - c, self.alpha3 - c,
                            self.Gamma1, self.Gamma2, self.group, self.n)

    def matrix(self) -> np.ndarray:
        """Block Hamiltonian in the normalized basis (seed, symmetric, partner)."""
        g1, g2 = math.sqrt(2) * self.Gamma1, math.sqrt(2) * self.Gamma2
        return np.array([[self.alpha1, g1, 0.0],
                         [g1, self.alpha2, g2],
                         [0.0, g2, self.alpha3]])


@dataclass(frozen=True)
class EigenTriple:
    eta: np.ndarray
    X1: float
    X2: float
    X3: float
    theta: np.ndarray


def nonlinear_shift(chi: float, n):
    """Kerr energy f(chi, n) = chi n (n - 1) + 2 sqrt(chi) n."""
    return chi * n * (n - 1) + 2.0 * math.sqrt(chi) * n


def branch_parameters(config: ModelConfig, n: int, group: Group) -> BranchParams:
    chi, delta = config.chi, config.delta
    f = lambda k: nonlinear_shift(chi, k)  # noqa: E731
    if group is Group.EXCITED:
        return BranchParams(delta + f(n), f(n + 1), -delta + f(n + 2),
                            math.sqrt(n + 1), math.sqrt(n + 2), group, n)
    if n < 2:
        raise DegenerateBlock(f"ground block n={n} has dimension {n + 1}")
    return BranchParams(-delta + f(n), f(n - 1), delta + f(n - 2),
                        math.sqrt(n), math.sqrt(n - 1), group, n)


def cubic_invariants(bp: BranchParams) -> tuple[float, float, float]:
    a1, a2, a3 = bp.alphas
    G1s, G2s = bp.Gamma1**2, bp.Gamma2**2
    X1 = a1 + a2 + a3
    X2 = a2 * a3 + a1 * (a2 + a3) - 2.0 * (G1s + G2s)
    X3 = a1 * a2 * a3 - 2.0 * (a1 * G2s + a3 * G1s)
    return X1, X2, X3


def eigenfrequencies(X1: float, X2: float, X3: float) -> EigenTriple:
    """Three real roots of eta^3 + X1 eta^2 + X2 eta + X3 by the cosine formula.

    Raises DegenerateBlock for a vanishing discriminant or nearly repeated roots.
    """
    disc = X1 * X1 - 3.0 * X2
    scale = max(1.0, X1 * X1, abs(X2))
    if disc <= DISC_TOL * scale:
        raise DegenerateBlock(f"repeated root: X1^2 - 3 X2 = {disc:.3e}")
    arg = (9.0 * X1 * X2 - 2.0 * X1**3 - 27.0 * X3) / (2.0 * disc**1.5)
    if abs(arg) > 1.0 + ACOS_CLAMP:
        raise DegenerateBlock(f"complex roots: acos argument {arg!r}")
    arg = min(1.0, max(-1.0, arg))
    theta = math.acos(arg) / 3.0 + 2.0 * math.pi * np.arange(3) / 3.0
    eta = -X1 / 3.0 + (2.0 / 3.0) * math.sqrt(disc) * np.cos(theta)
    spread = np.max(np.abs(eta))
    gaps = np.abs(eta[[0, 0, 1]] - eta[[1, 2, 2]])
    if np.min(gaps) < ROOT_SEP * spread:
        raise DegenerateBlock(f"nearly repeated roots {eta}")
    return EigenTriple(eta, X1, X2, X3, theta)


def block_eigen(bp: BranchParams) -> tuple[EigenTriple, float]:
    """Eigenfrequencies of a block, solved about the mean diagonal energy.

    Returns the triple for the shifted block and the shift ``c``; the physical
    frequencies are ``eig.eta - c``.
    """
    c = sum(bp.alphas) / 3.0
    return eigenfrequencies(*cubic_invariants(bp.shifted(c))), c
