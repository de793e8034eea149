"""Husimi Q-function of the cavity field on the complex alpha plane."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .amplitudes import AmplitudeTable


class QMode(enum.Enum):
    PAPER_TWO_TERM = "paper"  # |<a|U>|^2 + |<a|T>|^2 only
    FULL_FOUR_TERM = "full"   # adds |<a|R>|^2 + |<a|S>|^2

    @classmethod
    def parse(cls, s: str) -> "QMode":
        key = s.strip().lower()
        aliases = {"paper": cls.PAPER_TWO_TERM, "papertwoterm": cls.PAPER_TWO_TERM,
                   "two": cls.PAPER_TWO_TERM, "full": cls.FULL_FOUR_TERM,
                   "fullfourterm": cls.FULL_FOUR_TERM, "four": cls.FULL_FOUR_TERM}
        if key not in aliases:
            raise ValueError(f"unknown Q mode {s!r}")
        return aliases[key]


def coherent_overlaps(alpha, K: int) -> np.ndarray:
    """<alpha|n> = exp(-|alpha|^2/2) conj(alpha)^n / sqrt(n!) for n < K, shape (..., K).

    Magnitudes are built in log form so large |alpha| or n never overflow.
    """
    alpha = np.asarray(alpha, dtype=complex)
    n = np.arange(K)
    half_log_fact = 0.5 * np.concatenate([[0.0], np.cumsum(np.log(np.arange(1, K)))])
    r = np.abs(alpha)[..., None]
    with np.errstate(divide="ignore", invalid="ignore"):
        log_r = np.log(r)
        log_mag = -0.5 * r**2 + n * log_r - half_log_fact
    log_mag = np.where((r == 0) & (n == 0), -0.5 * r**2, log_mag)
    phase = np.exp(-1j * n * np.angle(alpha)[..., None])
    return np.exp(log_mag) * phase


def _weights(mode: QMode) -> np.ndarray:
    if mode is QMode.PAPER_TWO_TERM:
        return np.array([1.0, 0.0, 0.0, 1.0])
    return np.ones(4)


def q_value(alpha, tab: AmplitudeTable, mode: QMode = QMode.FULL_FOUR_TERM):
    """Q(alpha) for a single-time table; ``alpha`` may be an array."""
    W = tab.components()
    if W.ndim != 2:
        raise ValueError("q_value expects a table at a single time")
    ov = coherent_overlaps(alpha, W.shape[-1])
    amp = ov @ W.T  # (..., 4): <alpha|component>
    return (np.abs(amp) ** 2 @ _weights(mode)) / np.pi


@dataclass(frozen=True)
class QGrid:
    x: np.ndarray
    y: np.ndarray
    values: np.ndarray  # values[i, j] = Q(x[i] + 1j y[j])
    mode: QMode

    @property
    def dx(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def dy(self) -> float:
        return float(self.y[1] - self.y[0])

    def integral(self) -> float:
        return float(self.values.sum() * self.dx * self.dy)

    def peak(self) -> complex:
        i, j = np.unravel_index(np.argmax(self.values), self.values.shape)
        return complex(self.x[i], self.y[j])


def q_grid(tab: AmplitudeTable, window=(-12.0, 12.0, -12.0, 12.0), nx: int = 256,
           ny: int = 256, mode: QMode = QMode.FULL_FOUR_TERM) -> QGrid:
    if nx < 16 or ny < 16:
        raise ValueError("grid needs at least 16 points per axis")
    x0, x1, y0, y1 = window
    x = np.linspace(x0, x1, nx)
    y = np.linspace(y0, y1, ny)
    alpha = x[:, None] + 1j * y[None, :]
    return QGrid(x, y, q_value(alpha, tab, mode), mode)


def blob_count(grid: QGrid, rel_threshold: float = 0.2) -> int:
    """Connected components (4-neighbour) of {Q >= rel_threshold * max Q}."""
    if grid.values.size == 0:
        raise ValueError("empty grid")
    if not 0.0 < rel_threshold < 1.0:
        raise ValueError("rel_threshold must lie in (0, 1)")
    mask = grid.values >= rel_threshold * grid.values.max()
    _, count = ndimage.label(mask)
    return int(count)
