"""Command-line entry point: ``genant {simulate,detect,experiment,render,catalog}``.

Exit codes: 0 success (a run with no highway is a success), 1 I/O failure,
2 invalid input. Every subcommand prints its effective configuration first.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import analysis
from .analysis import DetectorParams, detect_highway, load_catalog, primitive_period
from .core import AntConfiguration, GridConfig, RuleError, RuleWord, Trace, Trajectory, \
    apply_pattern
from .engine import fast_run
from .experiment import ExperimentPlan, anomalies, experiment_detector, results_csv, run_batch
from .patterns import PatternError, PatternGrid, load_pattern, parse_heading
from .render import Palette, dump_text, render_bitmap


class InputError(Exception):
    """Invalid user input; exit code 2."""


def _echo_config(command: str, config: dict):
    print("# effective configuration: " + json.dumps({"command": command, **config},
                                                    sort_keys=True))


def _write(path: str, data: str | bytes):
    p = Path(path)
    if isinstance(data, bytes):
        p.write_bytes(data)
    else:
        p.write_text(data, encoding="utf-8")


# simulation inputs --------------------------------------------------------

def _add_sim_args(p: argparse.ArgumentParser, steps_flag: str = "--steps", default=None):
    p.add_argument("--rule", default="LLLR", help="rule word over {L,R} (default LLLR)")
    p.add_argument(steps_flag, dest="steps", type=int, default=default,
                   help="number of steps to simulate")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--pattern", help="seed pattern file")
    src.add_argument("--uniform", action="store_true", help="start from the uniform grid (default)")
    p.add_argument("--background", type=int, default=None,
                   help="background state (default: pattern's, else 0)")


def _parse_rule(text: str) -> RuleWord:
    try:
        return RuleWord.parse(text)
    except RuleError as exc:
        raise InputError(str(exc)) from None


def _initial_config(args) -> tuple[AntConfiguration, dict]:
    rule = _parse_rule(args.rule)
    if args.pattern:
        try:
            pattern = load_pattern(args.pattern, rule.m)
        except OSError as exc:
            raise InputError(f"cannot read pattern {args.pattern}: {exc.strerror}") from None
        except PatternError as exc:
            raise InputError(f"{args.pattern}: {exc}") from None
    else:
        pattern = PatternGrid.empty()
    background = args.background
    if background is None:
        background = pattern.background if pattern.background is not None else 0
    if not 0 <= background < rule.m:
        raise InputError(f"background {background} out of range for rule {rule}")
    config = apply_pattern(background, pattern, rule)
    desc = {
        "rule": str(rule), "background": background,
        "pattern": args.pattern or "uniform",
        "ant": [*config.position, config.heading.label],
    }
    return config, desc


def _config_record(config: AntConfiguration) -> dict:
    return {
        "rule": str(config.rule),
        "background": config.grid.background,
        "cells": sorted([i, j, v] for (i, j), v in config.grid.cells.items()),
        "position": list(config.position),
        "heading": config.heading.label,
    }


def _config_from_record(rec: dict) -> AntConfiguration:
    rule = RuleWord.parse(rec["rule"])
    grid = GridConfig(rule.m, int(rec["background"]))
    for i, j, v in rec["cells"]:
        grid[(i, j)] = v
    return AntConfiguration(grid, tuple(rec["position"]), parse_heading(rec["heading"]), rule)


def _load_record(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from None
    try:
        rec = json.loads(text)
        rec["final"]
    except (ValueError, KeyError, TypeError):
        raise InputError(f"{path} is not a simulation record") from None
    return rec


def _recording_from_record(rec: dict) -> tuple[Trace, Trajectory]:
    trace = Trace(np.array(analysis.word_symbols(rec["trace"]) if rec["trace"] else [],
                           dtype=np.int64))
    traj = Trajectory(np.array(rec["trajectory"], dtype=np.int64).reshape(-1, 2))
    return trace, traj


# subcommands --------------------------------------------------------------

def cmd_simulate(args) -> int:
    if args.steps is None or args.steps < 0:
        raise InputError("--steps must be given and >= 0")
    config, desc = _initial_config(args)
    _echo_config("simulate", {**desc, "steps": args.steps, "out": args.out})
    final, trace, traj = fast_run(config, args.steps)
    record = {
        "steps": args.steps,
        "initial": _config_record(config),
        "final": _config_record(final),
        "trace": analysis.word_str(trace.symbols),
        "trajectory": traj.positions.tolist(),
    }
    _write(args.out, json.dumps(record) + "\n")
    print(dump_text(final), end="")
    return 0


def _detector_params(args) -> DetectorParams:
    try:
        return DetectorParams(n_max=args.n_max, confirm_periods=args.confirm,
                              check_interval=args.check_interval, min_window=args.min_window)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _catalog(args):
    try:
        return load_catalog(args.catalog)
    except analysis.CatalogError as exc:
        raise InputError(str(exc)) from None


def cmd_detect(args) -> int:
    params = _detector_params(args)
    catalog = _catalog(args)
    if args.input:
        rec = _load_record(args.input)
        rule = RuleWord.parse(rec["final"]["rule"])
        trace, traj = _recording_from_record(rec)
        _echo_config("detect", {"in": args.input, "rule": str(rule),
                                "steps": len(trace), **params.__dict__})
    else:
        if args.steps is None or args.steps < 0:
            raise InputError("give --in or --horizon N")
        config, desc = _initial_config(args)
        rule = config.rule
        _echo_config("detect", {**desc, "horizon": args.steps, **params.__dict__})
        _, trace, traj = fast_run(config, args.steps)
    report = detect_highway(trace, traj, params)
    if report is None:
        print("none")
    else:
        report.classification = analysis.classify(report, catalog, rule)
        print(report.to_json())
    return 0


def _pattern_size(text: str) -> tuple[int, int]:
    w, _, h = text.lower().partition("x")
    try:
        width, height = int(w), int(h or w)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad pattern size {text!r}; use N or WxH") from None
    if width < 1 or height < 1:
        raise argparse.ArgumentTypeError("pattern size must be >= 1")
    return width, height


def cmd_experiment(args) -> int:
    rule = _parse_rule(args.rule)
    params = _detector_params(args)
    try:
        plan = ExperimentPlan(rule, args.pattern_size[0], args.pattern_size[1], args.horizon,
                              args.trials, args.master_seed, params, args.background)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _echo_config("experiment", {**plan.describe(), "out": args.out, "workers": args.workers})
    stats, results = run_batch(plan, workers=args.workers)
    _write(args.out, results_csv(plan, results, stats))
    if args.stats:
        _write(args.stats, stats.to_json() + "\n")
    odd = anomalies(results)
    if odd:
        path = args.anomalies or args.out + ".anomalies.json"
        _write(path, json.dumps(odd, indent=2) + "\n")
        print(f"# {len(odd)} trial(s) with uncatalogued highways written to {path}")
    print(stats.to_json())
    return 0


def _viewport(values):
    if values is None or values == ["auto"]:
        return None
    if len(values) != 4:
        raise InputError("--viewport takes 'auto' or four integers i0 j0 i1 j1")
    try:
        i0, j0, i1, j1 = (int(v) for v in values)
    except ValueError:
        raise InputError("--viewport takes 'auto' or four integers i0 j0 i1 j1") from None
    if i1 < i0 or j1 < j0:
        raise InputError("--viewport is empty")
    return i0, j0, i1, j1


def cmd_render(args) -> int:
    viewport = _viewport(args.viewport)
    if args.scale < 1:
        raise InputError("--scale must be >= 1")
    if args.input:
        rec = _load_record(args.input)
        try:
            config = _config_from_record(rec["final"])
        except (KeyError, ValueError, TypeError):
            raise InputError(f"{args.input}: malformed final configuration") from None
        desc = {"in": args.input}
    else:
        config, desc = _initial_config(args)
        steps = args.steps or 0
        if steps < 0:
            raise InputError("--steps must be >= 0")
        config, _, _ = fast_run(config, steps)
        desc["steps"] = steps
    _echo_config("render", {**desc, "scale": args.scale, "viewport": viewport or "auto",
                            "outline_origin": args.outline_origin, "out": args.out})
    if args.text:
        _write(args.out, dump_text(config, viewport))
    else:
        palette = Palette.default(config.grid.m, outline_origin=args.outline_origin)
        _write(args.out, render_bitmap(config, viewport, args.scale, palette))
    return 0


def cmd_catalog(args) -> int:
    catalog = _catalog(args)
    _echo_config("catalog", {"catalog": args.catalog or "builtin",
                             "verify": bool(args.verify)})
    ok = True
    for entry in catalog:
        line = entry.format()
        if args.verify:
            if entry.word_class is None:
                line += "  [period-only]"
            else:
                symbols = analysis.word_symbols(entry.word_class)
                p = primitive_period(symbols)
                good = p == len(symbols) == entry.period
                ok &= good
                line = (f"{entry.name}: length={len(symbols)} primitive_period={p} "
                        f"canonical=yes {'OK' if good else 'FAIL'}")
        print(line)
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genant", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run an ant and save its trace")
    _add_sim_args(p)
    p.add_argument("--out", required=True, help="output JSON record")
    p.set_defaults(func=cmd_simulate)

    def add_detector(p, d=DetectorParams()):
        p.add_argument("--n-max", type=int, default=d.n_max)
        p.add_argument("--confirm", type=int, default=d.confirm_periods,
                       help="confirmation periods K")
        p.add_argument("--check-interval", type=int, default=d.check_interval)
        p.add_argument("--min-window", type=int, default=d.min_window)
        p.add_argument("--catalog", help="catalog file (default: built-in)")

    p = sub.add_parser("detect", help="certify a highway in a recorded or fresh run")
    p.add_argument("--in", dest="input", help="simulation record from 'simulate'")
    _add_sim_args(p, "--horizon")
    add_detector(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("experiment", help="seeded batch of random-pattern trials")
    p.add_argument("--rule", default="LLLR")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--horizon", type=int, default=100_000)
    p.add_argument("--pattern-size", type=_pattern_size, default=(11, 11), help="N or WxH")
    p.add_argument("--master-seed", type=int, default=0)
    p.add_argument("--background", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True, help="results CSV")
    p.add_argument("--stats", help="also write stats JSON here")
    p.add_argument("--anomalies", help="uncatalogued highways (default: OUT.anomalies.json)")
    add_detector(p, experiment_detector())
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("render", help="write a PPM (or text) snapshot")
    p.add_argument("--in", dest="input", help="simulation record; renders its final state")
    _add_sim_args(p)
    p.add_argument("--scale", type=int, default=4)
    p.add_argument("--viewport", nargs="+", metavar="V", help="'auto' or i0 j0 i1 j1")
    p.add_argument("--outline-origin", action="store_true")
    p.add_argument("--text", action="store_true", help="write a text dump instead of PPM")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("catalog", help="show or check the highway catalog")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--verify", action="store_true")
    p.add_argument("--catalog", help="catalog file (default: built-in)")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"genant: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"genant: I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
