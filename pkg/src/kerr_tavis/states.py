"""Initial field and atomic states.

The cavity starts in a binomial state |p, M> and the two atoms in the
Bell-type superposition gamma1 |uu> + gamma4 |dd>.  Everything downstream
reads its physical parameters from a :class:`ModelConfig`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

EPS_CUT = 1e-12
BELL_TOL = 1e-9


def _is_integer(M: float) -> bool:
    return float(M).is_integer()


def support_max(M: float) -> int:
    """Largest photon number carrying a non-negative generalized binomial weight."""
    return int(math.ceil(M))


def _log_weights(p: float, M: float, n: np.ndarray) -> np.ndarray:
    # log of C(M, n) p^n (1-p)^(M-n) via the Gamma function
    return (gammaln(M + 1.0) - gammaln(n + 1.0) - gammaln(M - n + 1.0)
            + n * math.log(p) + (M - n) * math.log1p(-p))


def _raw_weights(p: float, M: float) -> np.ndarray:
    """Unnormalized b_n^2 over the support n = 0..ceil(M)."""
    n = np.arange(support_max(M) + 1, dtype=float)
    w = np.exp(_log_weights(p, M, n))
    if not _is_integer(M):
        # sign of the generalized coefficient prod_{k<n}(M-k) / n!
        sign = np.array([np.prod(np.sign(M - np.arange(k))) for k in range(n.size)])
        if np.any(sign < 0):
            raise ValueError(f"negative generalized binomial weight for M={M}")
    return w


def _check_pM(p: float, M: float) -> None:
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie strictly inside (0, 1), got {p}")
    if not M > 0:
        raise ValueError(f"M must be positive, got {M}")


def binomial_coefficients(p: float, M: float, cutoff: int, eps: float = EPS_CUT) -> np.ndarray:
    """Binomial-state amplitudes b_0..b_cutoff.

    For integer M the entries above M are exactly zero.  For non-integer M the
    support stops at ceil(M), beyond which the generalized coefficient changes
    sign; the retained weights are renormalized to unit norm.

    Raises ValueError when the retained mass falls short of ``1 - eps``.
    """
    _check_pM(p, M)
    if cutoff < 0:
        raise ValueError(f"cutoff must be non-negative, got {cutoff}")
    w = _raw_weights(p, M)
    kept = w[: cutoff + 1]
    total = w.sum() if not _is_integer(M) else 1.0
    mass = kept.sum() / total
    if mass < 1.0 - eps:
        raise ValueError(
            f"cutoff {cutoff} too small: retained probability {mass:.3e} < 1 - {eps:g}")
    b = np.zeros(cutoff + 1)
    b[: kept.size] = np.sqrt(kept / total)
    if not _is_integer(M):
        b /= np.linalg.norm(b)
    return b


def choose_cutoff(p: float, M: float, eps: float = EPS_CUT) -> int:
    """Smallest n_max whose discarded tail is below ``eps``, plus 4.

    Integer M has finite support, so the cutoff is exactly M + 4 and nothing
    is discarded.
    """
    _check_pM(p, M)
    if not 0.0 < eps <= 1e-3:
        raise ValueError(f"eps must lie in (0, 1e-3], got {eps}")
    if _is_integer(M):
        return int(M) + 4
    w = _raw_weights(p, M)
    w = w / w.sum() if not _is_integer(M) else w
    # tail[k] = sum_{n > k} w_n
    tail = np.concatenate([np.cumsum(w[::-1])[::-1][1:], [0.0]])
    n_max = int(np.argmax(tail < eps))
    return n_max + 4


@dataclass(frozen=True)
class BinomialField:
    p: float
    M: float
    cutoff: int
    coeffs: np.ndarray = field(repr=False, compare=False)

    @classmethod
    def create(cls, p: float, M: float, cutoff: int | None = None,
               eps: float = EPS_CUT) -> "BinomialField":
        if cutoff is None:
            cutoff = choose_cutoff(p, M, eps)
        b = binomial_coefficients(p, M, cutoff, eps)
        b.setflags(write=False)
        return cls(float(p), float(M), int(cutoff), b)

    @property
    def mean_photons(self) -> float:
        n = np.arange(self.coeffs.size)
        return float(np.sum(n * self.coeffs**2))


@dataclass(frozen=True)
class BellState:
    gamma1: complex
    gamma4: complex


def validate_bell(gamma1: complex, gamma4: complex) -> BellState:
    """Check normalization of gamma1 |uu> + gamma4 |dd>.

    Inputs within 1e-9 of unit norm are renormalized; anything else raises.
    """
    g1, g4 = complex(gamma1), complex(gamma4)
    norm = math.hypot(abs(g1), abs(g4))
    if norm == 0.0:
        raise ValueError("Bell amplitudes are both zero")
    if abs(norm - 1.0) > BELL_TOL:
        raise ValueError(f"Bell state not normalized: |gamma1|^2 + |gamma4|^2 = {norm**2:.6g}")
    if norm != 1.0:
        g1, g4 = g1 / norm, g4 / norm
    return BellState(g1, g4)


@dataclass(frozen=True)
class ModelConfig:
    """Physical parameters of one run; rates are in units of the coupling lambda."""

    field: BinomialField
    atoms: BellState
    chi: float = 0.0
    delta: float = 0.0
    lambda_scale: float = 1.0

    def __post_init__(self):
        if self.chi < 0:
            raise ValueError(f"chi must be non-negative, got {self.chi}")
        if self.lambda_scale != 1.0:
            raise ValueError("lambda is fixed to 1; express chi and delta in units of lambda")
        need = support_max(self.field.M) + 4
        if _is_integer(self.field.M) and self.field.cutoff < need:
            raise ValueError(f"cutoff {self.field.cutoff} < M + 4 = {need}")

    @classmethod
    def create(cls, p: float, M: float, chi: float = 0.0, delta: float = 0.0,
               gamma1: complex = 1 / math.sqrt(2), gamma4: complex = 1j / math.sqrt(2),
               cutoff: int | None = None, eps: float = EPS_CUT) -> "ModelConfig":
        return cls(BinomialField.create(p, M, cutoff, eps), validate_bell(gamma1, gamma4),
                   float(chi), float(delta))

    @property
    def cutoff(self) -> int:
        return self.field.cutoff

    @property
    def b(self) -> np.ndarray:
        return self.field.coeffs
