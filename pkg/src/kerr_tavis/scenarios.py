"""Scenario documents and the figure presets.

A scenario is a flat UTF-8 ``key = value`` document; ``#`` starts a comment.
Recognized keys::

    p, m                      binomial parameters (required)
    gamma1_re, gamma1_im      amplitude of |uu>   (default 1/sqrt 2)
    gamma4_re, gamma4_im      amplitude of |dd>   (default i/sqrt 2)
    chi, delta                Kerr strength and detuning over lambda
    t_min, t_max, n_steps     time sweep in Rabi angle
    cutoff                    photon cutoff (default: chosen from p, m)
    outputs                   comma list of squeezing, entropy, inversion, qgrid
    q_window                  R  or  xmin, xmax, ymin, ymax
    q_resolution              N  or  nx, ny
    q_mode                    full | paper
    q_times                   comma list; accepts pi, pi/4, 3*pi/4, ...
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .husimi import QMode
from .states import ModelConfig

KEYS = ("p", "m", "gamma1_re", "gamma1_im", "gamma4_re", "gamma4_im", "chi", "delta",
        "t_min", "t_max", "n_steps", "cutoff", "outputs", "q_window", "q_resolution",
        "q_mode", "q_times")
OUTPUTS = ("squeezing", "entropy", "inversion", "qgrid")


class ScenarioError(ValueError):
    pass


@dataclass(frozen=True)
class Scenario:
    config: ModelConfig
    t_min: float = 0.0
    t_max: float = 25.0
    n_steps: int = 501
    outputs: frozenset = frozenset({"squeezing", "entropy", "inversion"})
    q_window: tuple = (-12.0, 12.0, -12.0, 12.0)
    q_resolution: tuple = (256, 256)
    q_mode: QMode = QMode.FULL_FOUR_TERM
    q_times: tuple = ()
    name: str = "scenario"
    source: dict = field(default_factory=dict, compare=False, repr=False)

    def times(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.n_steps)


_PI_RE = re.compile(r"^(?:([0-9.eE+-]+)\s*\*?\s*)?pi(?:\s*/\s*([0-9.eE+-]+))?$")


def parse_time(text: str) -> float:
    s = text.strip().lower()
    m = _PI_RE.match(s)
    if m:
        num = float(m.group(1)) if m.group(1) else 1.0
        den = float(m.group(2)) if m.group(2) else 1.0
        return num * math.pi / den
    return float(s)


def _floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def parse_scenario(text: str, name: str = "scenario") -> Scenario:
    raw: dict[str, tuple[int, str]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ScenarioError(f"line {lineno}: expected 'key = value', got {line.strip()!r}")
        key, value = (s.strip() for s in body.split("=", 1))
        key = key.lower()
        if key not in KEYS:
            raise ScenarioError(f"line {lineno}: unknown key {key!r}")
        raw[key] = (lineno, value)

    for req in ("p", "m"):
        if req not in raw:
            raise ScenarioError(f"missing required key {req!r}")

    def get(key, conv, default):
        if key not in raw:
            return default
        lineno, value = raw[key]
        try:
            return conv(value)
        except (ValueError, TypeError) as exc:
            raise ScenarioError(f"line {lineno}: bad value for {key}: {exc}") from None

    def where(key):
        return f"line {raw[key][0]}" if key in raw else "defaults"

    p = get("p", float, None)
    M = get("m", float, None)
    if not 0 < p < 1:
        raise ScenarioError(f"{where('p')}: p = {p} out of range (0, 1)")
    if not M > 0:
        raise ScenarioError(f"{where('m')}: m = {M} must be positive")
    g1 = complex(get("gamma1_re", float, 1 / math.sqrt(2)), get("gamma1_im", float, 0.0))
    g4 = complex(get("gamma4_re", float, 0.0), get("gamma4_im", float, 1 / math.sqrt(2)))
    chi = get("chi", float, 0.0)
    if chi < 0:
        raise ScenarioError(f"{where('chi')}: chi = {chi} must be non-negative")
    delta = get("delta", float, 0.0)
    cutoff = get("cutoff", int, None)
    try:
        config = ModelConfig.create(p, M, chi=chi, delta=delta, gamma1=g1, gamma4=g4,
                                    cutoff=cutoff)
    except ValueError as exc:
        raise ScenarioError(f"{where('cutoff') if cutoff is not None else 'config'}: {exc}") from None

    t_min = get("t_min", parse_time, 0.0)
    t_max = get("t_max", parse_time, 25.0)
    n_steps = get("n_steps", int, 501)
    if n_steps < 2:
        raise ScenarioError(f"{where('n_steps')}: n_steps must be at least 2")
    if not t_min < t_max:
        raise ScenarioError(f"{where('t_max')}: need t_min < t_max")

    outputs = get("outputs", lambda v: frozenset(s.strip().lower() for s in v.split(",") if s.strip()),
                  frozenset({"squeezing", "entropy", "inversion"}))
    bad = outputs - set(OUTPUTS)
    if bad:
        raise ScenarioError(f"{where('outputs')}: unknown outputs {sorted(bad)}")

    win = get("q_window", _floats, [12.0])
    if len(win) == 1:
        win = [-abs(win[0]), abs(win[0]), -abs(win[0]), abs(win[0])]
    if len(win) != 4 or win[0] >= win[1] or win[2] >= win[3]:
        raise ScenarioError(f"{where('q_window')}: q_window needs R or xmin,xmax,ymin,ymax")
    res = get("q_resolution", lambda v: [int(x) for x in v.split(",")], [256])
    if len(res) == 1:
        res = res * 2
    if len(res) != 2 or min(res) < 16:
        raise ScenarioError(f"{where('q_resolution')}: resolution must be >= 16 per axis")
    q_mode = get("q_mode", QMode.parse, QMode.FULL_FOUR_TERM)
    q_times = get("q_times", lambda v: tuple(parse_time(x) for x in v.split(",") if x.strip()), ())
    if "qgrid" in outputs and not q_times:
        raise ScenarioError(f"{where('outputs')}: qgrid output needs q_times")

    return Scenario(config, t_min, t_max, n_steps, outputs, tuple(win), tuple(res), q_mode,
                    q_times, name, {k: v for k, (_, v) in raw.items()})


_BASE = """\
p = 0.9
m = 50
chi = {chi}
delta = {delta}
t_min = 0
t_max = 25
n_steps = 2501
"""

_GRID = """\
p = 0.9
m = 50
chi = {chi}
delta = 0
outputs = qgrid
q_window = 12
q_resolution = 256
q_mode = full
q_times = {times}
"""

PRESETS: dict[str, str] = {
    "fig1": _BASE.format(chi=0.0, delta=0.0),
    "fig2": _BASE.format(chi=0.0, delta=10.0),
    "fig3": _BASE.format(chi=0.5, delta=0.0),
    "fig4": _BASE.format(chi=5.0, delta=0.0),
    "fig5": _BASE.format(chi=0.5, delta=5.0),
    "fig6": _BASE.format(chi=0.0, delta=0.0).replace("p = 0.9", "p = 0.98").replace("m = 50", "m = 100"),
    "fig7": _BASE.format(chi=0.5, delta=0.0).replace("p = 0.9", "p = 0.98").replace("m = 50", "m = 100"),
    "fig9": _GRID.format(chi=5.0, times="0, pi/6, pi/4, pi/3, pi/2, pi"),
}
for _label, _chi in zip("abcdefg", (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 5.0)):
    PRESETS[f"fig8{_label}"] = _GRID.format(chi=_chi, times="pi/4")

GROUPS = {"fig8": [f"fig8{c}" for c in "abcdefg"]}


def preset(name: str) -> Scenario:
    try:
        text = PRESETS[name]
    except KeyError:
        raise ScenarioError(f"unknown preset {name!r}; choose from {sorted(PRESETS) + sorted(GROUPS)}") from None
    return parse_scenario(text, name)
