"""Command line entry point: ``kerr-tavis run`` and ``kerr-tavis verify``.

Exit codes: 0 success, 1 invalid scenario or arguments, 2 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import scenarios
from .amplitudes import Dynamics
from .density import atomic_density
from .entropy import atomic_entropy
from .husimi import blob_count, q_grid
from .observables import inversion, squeezing_parameters
from .scenarios import Scenario, ScenarioError
from .verification import run_verify


SWEEP_HEADER = "lambda_t,F1,F2,F1_literal,F2_literal,S_A,inversion"
FMT = "%.12e"


def run_sweep(scn: Scenario) -> np.ndarray:
    """Time series table with one row per time, columns as in ``SWEEP_HEADER``."""
    ts = scn.times()
    rho = atomic_density(Dynamics(scn.config).table(ts))
    sq = squeezing_parameters(rho)
    return np.column_stack([ts, sq.F1, sq.F2, sq.F1_literal, sq.F2_literal,
                            atomic_entropy(rho), inversion(rho)])


def write_sweep(rows: np.ndarray, path: Path) -> None:
    np.savetxt(path, rows, fmt=FMT, delimiter=",", header=SWEEP_HEADER, comments="")


def run_qgrid(scn: Scenario, out: Path, threshold: float = 0.2) -> list[dict]:
    """Write one ``X,Y,Q`` CSV plus ``.meta`` per requested time; return the summaries."""
    out.mkdir(parents=True, exist_ok=True)
    dyn = Dynamics(scn.config)
    nx, ny = scn.q_resolution
    summaries = []
    for i, t in enumerate(scn.q_times):
        grid = q_grid(dyn.table(t), scn.q_window, nx, ny, scn.q_mode)
        stem = out / f"{scn.name}_q{i}"
        X, Y = np.meshgrid(grid.x, grid.y, indexing="ij")
        np.savetxt(stem.with_suffix(".csv"), np.column_stack([X.ravel(), Y.ravel(), grid.values.ravel()]),
                   fmt=FMT, delimiter=",", header="X,Y,Q", comments="")
        peak = grid.peak()
        summary = dict(time=t, blob_count=blob_count(grid, threshold), peak_x=peak.real,
                       peak_y=peak.imag, peak_radius=abs(peak), q_max=float(grid.values.max()),
                       integral=grid.integral())
        meta = [f"window = {', '.join(f'{w:g}' for w in scn.q_window)}",
                f"resolution = {nx}, {ny}",
                f"mode = {scn.q_mode.value}",
                f"time = {t:.12e}",
                f"blob_count = {summary['blob_count']}",
                f"blob_threshold = {threshold:g}",
                f"peak = {peak.real:.12e}, {peak.imag:.12e}",
                f"integral = {summary['integral']:.12e}"]
        stem.with_suffix(".meta").write_text("\n".join(meta) + "\n", encoding="utf-8")
        summaries.append(summary)
    return summaries


def _run_one(scn: Scenario, out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    if scn.outputs & {"squeezing", "entropy", "inversion"}:
        path = out / f"{scn.name}_timeseries.csv"
        write_sweep(run_sweep(scn), path)
        print(f"{scn.name}: wrote {path}")
    if "qgrid" in scn.outputs:
        for s in run_qgrid(scn, out):
            print(f"{scn.name}: t={s['time']:.6f} blobs={s['blob_count']} "
                  f"peak=({s['peak_x']:.3f}, {s['peak_y']:.3f}) |alpha|={s['peak_radius']:.3f}")


def _cmd_run(args) -> int:
    if args.scenario:
        path = Path(args.scenario)
        items = [scenarios.parse_scenario(path.read_text(encoding="utf-8"), path.stem)]
    else:
        names = scenarios.GROUPS.get(args.preset, [args.preset])
        items = [scenarios.preset(n) for n in names]
    for scn in items:
        _run_one(scn, Path(args.out))
    return 0


def _cmd_verify(args) -> int:
    results = run_verify(args.scale)
    for r in results:
        print(r.line())
    failed = [r.key for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed"
          + (f"; failed: {', '.join(failed)}" if failed else ""))
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kerr-tavis", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="evaluate a scenario or figure preset")
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--scenario", help="key = value scenario file")
    src.add_argument("--preset", help="fig1..fig7, fig8[a-g], fig8, fig9")
    run.add_argument("--out", default="out", help="output directory")
    run.set_defaults(func=_cmd_run)
    ver = sub.add_parser("verify", help="run the acceptance checks")
    ver.add_argument("--scale", choices=("small", "full"), default="small")
    ver.add_argument("--out", default=None, help="unused; accepted for symmetry with run")
    ver.set_defaults(func=_cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (ScenarioError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
