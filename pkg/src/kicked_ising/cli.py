"""Command-line front end: experiment configuration, execution, CSV emission.

Four subcommands: ``evolve`` (time series of measures), ``sweep`` (two-axis
grid of time averages), ``analytic`` (closed forms alone), and ``compare``
(numeric vs closed form, with a tolerance gate on the exit code).

Values are printed with 17 significant digits so the CSV round-trips to
bit-identical doubles; identical invocations produce byte-identical files.
A flat ``key = value`` config file can supply any flag; explicit flags win.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import analytic
from .harness import (
    MEASURES,
    AxisSpec,
    NoAnalyticOracleError,
    RunConfig,
    SweepConfig,
    compare_numeric_analytic,
    run_time_series,
    sweep_grid,
)
from .statevec import ChainParams

_AXIS_NAMES = {"jx": "j_x", "j_x": "j_x", "b": "b_field", "b_field": "b_field", "theta": "theta"}

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_USAGE = 2
EXIT_NO_ORACLE = 3


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write_lines(path: str | None, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _parse_config_file(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
            key, value = line.split("=", 1)
            out[key.strip().replace("-", "_")] = value.strip()
    return out


def _merge_config(args: argparse.Namespace, types: dict[str, type], defaults: dict) -> None:
    """Fill unset flags from the config file, then from the defaults table."""
    if getattr(args, "config", None):
        for key, text in _parse_config_file(args.config).items():
            if key not in types:
                raise ValueError(f"unknown config key {key!r}")
            if getattr(args, key, None) is None:
                setattr(args, key, types[key](text))
    for key, value in defaults.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _require(args: argparse.Namespace, names: list[str]) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise ValueError("missing required parameter(s): " + ", ".join(sorted(missing)))


def _workers(args: argparse.Namespace) -> int:
    if getattr(args, "workers", None) is not None:
        return max(1, args.workers)
    return max(1, int(os.environ.get("KICKED_ISING_WORKERS", "1")))


def _parse_axis(text: str) -> AxisSpec:
    parts = text.split(":")
    if len(parts) != 4:
        raise ValueError(f"axis must be given as name:min:max:count, got {text!r}")
    name, lo, hi, count = parts
    if name not in _AXIS_NAMES:
        raise ValueError(f"axis name must be one of {sorted(set(_AXIS_NAMES))}, got {name!r}")
    return AxisSpec(_AXIS_NAMES[name], float(lo), float(hi), int(count))


# ------------------------------------------------------------------- evolve

_EVOLVE_TYPES = {"L": int, "jx": float, "b": float, "theta": float, "steps": int,
                 "boundary": str, "initial": str, "sample_every": int}
_EVOLVE_DEFAULTS = {"boundary": "periodic", "initial": "vacuum", "sample_every": 1}


def _cmd_evolve(args: argparse.Namespace) -> int:
    _merge_config(args, _EVOLVE_TYPES, _EVOLVE_DEFAULTS)
    _require(args, ["L", "jx", "b", "theta", "steps"])
    params = ChainParams(args.L, args.jx, args.b, args.theta, args.boundary)
    config = RunConfig(params=params, steps=args.steps, initial=args.initial,
                       sample_every=args.sample_every)
    series = run_time_series(config)
    lines = ["t,q,n_tangle,residual_tangle,nn_concurrence,sum_two_tangles"]
    for r in series:
        lines.append(",".join([
            str(r.t), _fmt(r.q_measure), _fmt(r.n_tangle), _fmt(r.residual_tangle),
            _fmt(r.nn_concurrence), _fmt(r.sum_two_tangles),
        ]))
    _write_lines(args.output, lines)
    return EXIT_OK


# -------------------------------------------------------------------- sweep

_SWEEP_TYPES = {"axis1": str, "axis2": str, "L": int, "jx": float, "b": float,
                "theta": float, "kicks": int, "measure": str, "boundary": str,
                "initial": str}
_SWEEP_DEFAULTS = {"measure": "q", "boundary": "periodic", "initial": "vacuum",
                   "jx": 0.0, "b": 0.0, "theta": 0.0}


def _cmd_sweep(args: argparse.Namespace) -> int:
    _merge_config(args, _SWEEP_TYPES, _SWEEP_DEFAULTS)
    _require(args, ["axis1", "axis2", "L", "kicks"])
    axis1 = _parse_axis(args.axis1)
    axis2 = _parse_axis(args.axis2)
    if args.measure not in MEASURES:
        raise ValueError(f"unknown measure {args.measure!r}; known: {sorted(MEASURES)}")
    fixed = ChainParams(args.L, args.jx, args.b, args.theta, args.boundary)
    config = SweepConfig(axis1=axis1, axis2=axis2, fixed=fixed, steps=args.kicks,
                         measure=args.measure, initial=args.initial)
    grid = sweep_grid(config, workers=_workers(args))
    v1s, v2s = axis1.values(), axis2.values()
    lines = ["axis1,axis2,value"]
    for i, v1 in enumerate(v1s):
        for j, v2 in enumerate(v2s):
            lines.append(f"{_fmt(v1)},{_fmt(v2)},{_fmt(grid[i, j])}")
    _write_lines(args.output, lines)
    return EXIT_OK


# ----------------------------------------------------------------- analytic

_ANALYTIC_TYPES = {"formula": str, "L": int, "jx": float, "b": float, "boundary": str,
                   "tmin": float, "tmax": float, "samples": int}
_ANALYTIC_DEFAULTS = {"boundary": "periodic", "tmin": 0.0, "samples": 100}

_FORMULAS = ("cluster_q", "cluster_nn_concurrence", "cluster_n_tangle", "sym_n_tangle", "jw_q")


def _cmd_analytic(args: argparse.Namespace) -> int:
    _merge_config(args, _ANALYTIC_TYPES, _ANALYTIC_DEFAULTS)
    _require(args, ["formula"])
    if args.formula not in _FORMULAS:
        raise ValueError(f"formula must be one of {_FORMULAS}, got {args.formula!r}")
    _require(args, ["jx", "tmax"])
    if args.formula == "jw_q":
        _require(args, ["L", "b"])
        ts = np.arange(0, int(args.tmax) + 1)
        values = analytic.jw_q_vacuum(args.L, args.jx, args.b, ts)
    else:
        ts = np.linspace(args.tmin, args.tmax, args.samples)
        if args.formula == "cluster_q":
            if args.boundary == "open":
                _require(args, ["L"])
            values = analytic.cluster_q(args.jx, ts, args.boundary, args.L)
        elif args.formula == "cluster_nn_concurrence":
            values = analytic.cluster_nn_concurrence(args.jx, ts)
        elif args.formula == "cluster_n_tangle":
            _require(args, ["L"])
            values = analytic.cluster_n_tangle(args.jx, ts, args.L)
        else:
            _require(args, ["L"])
            values = analytic.sym_cluster_n_tangle(args.jx, ts, args.L)
    lines = ["t,value"]
    for t, v in zip(ts, np.atleast_1d(values)):
        t_text = str(int(t)) if args.formula == "jw_q" else _fmt(float(t))
        lines.append(f"{t_text},{_fmt(float(v))}")
    _write_lines(args.output, lines)
    return EXIT_OK


# ------------------------------------------------------------------ compare

_COMPARE_TYPES = {"regime": str, "L": int, "jx": float, "b": float, "theta": float,
                  "boundary": str, "tmax": int, "tol": float}
_COMPARE_DEFAULTS = {"boundary": "periodic", "tol": 1e-8, "b": 0.0, "theta": 0.0}


def _cmd_compare(args: argparse.Namespace) -> int:
    _merge_config(args, _COMPARE_TYPES, _COMPARE_DEFAULTS)
    _require(args, ["regime", "L", "jx", "tmax"])
    if args.regime == "zero-field":
        params = ChainParams(args.L, args.jx, 0.0, args.theta, args.boundary)
        initial = "vacuum"
    elif args.regime == "transverse":
        params = ChainParams(args.L, args.jx, args.b, math.pi / 2.0, args.boundary)
        initial = "vacuum"
    elif args.regime == "symmetrized":
        params = ChainParams(args.L, args.jx, 0.0, args.theta, args.boundary)
        initial = "ghz"
    else:
        print(f"error: no analytic oracle for regime {args.regime!r}", file=sys.stderr)
        return EXIT_NO_ORACLE
    try:
        deviations = compare_numeric_analytic(params, args.tmax, initial=initial)
    except NoAnalyticOracleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_ORACLE
    lines = ["measure,max_abs_deviation"]
    for name in sorted(deviations):
        lines.append(f"{name},{_fmt(deviations[name])}")
    _write_lines(args.output, lines)
    worst = max(deviations.values())
    ok = worst <= args.tol
    print(f"max deviation {_fmt(worst)} vs tolerance {_fmt(args.tol)}: "
          f"{'OK' if ok else 'EXCEEDED'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_TOLERANCE


# -------------------------------------------------------------------- wiring

def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="flat 'key = value' config file; flags override")
    sub.add_argument("--output", help="output CSV path (default: stdout)")
    sub.add_argument("--workers", type=int, help="parallel workers for sweeps "
                     "(default: $KICKED_ISING_WORKERS or 1)")
    sub.add_argument("--seed", type=int, help="reserved; no randomness in scope")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kicked-ising",
        description="Kicked Ising chain: evolution, entanglement measures, closed forms.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("evolve", help="time series of entanglement measures")
    p.add_argument("--L", type=int)
    p.add_argument("--jx", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--boundary", choices=("periodic", "open"))
    p.add_argument("--initial")
    p.add_argument("--sample-every", dest="sample_every", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_evolve)

    p = subs.add_parser("sweep", help="two-axis grid of time-averaged measures")
    p.add_argument("--axis1", help="swept axis as name:min:max:count")
    p.add_argument("--axis2", help="second swept axis")
    p.add_argument("--L", type=int)
    p.add_argument("--jx", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--kicks", type=int, help="time-average window in kicks")
    p.add_argument("--measure", help="measure to average (default q)")
    p.add_argument("--boundary", choices=("periodic", "open"))
    p.add_argument("--initial")
    _add_common(p)
    p.set_defaults(func=_cmd_sweep)

    p = subs.add_parser("analytic", help="closed-form curves as CSV")
    p.add_argument("--formula", help="one of " + ", ".join(_FORMULAS))
    p.add_argument("--L", type=int)
    p.add_argument("--jx", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--boundary", choices=("periodic", "open"))
    p.add_argument("--tmin", type=float)
    p.add_argument("--tmax", type=float)
    p.add_argument("--samples", type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_analytic)

    p = subs.add_parser("compare", help="numeric evolution vs closed form")
    p.add_argument("--regime", help="zero-field, transverse, or symmetrized")
    p.add_argument("--L", type=int)
    p.add_argument("--jx", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--boundary", choices=("periodic", "open"))
    p.add_argument("--tmax", type=int)
    p.add_argument("--tol", type=float)
    _add_common(p)
    p.set_defaults(func=_cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
