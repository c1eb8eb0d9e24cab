"""Command-line entry point.

Subcommands:

  region    compute inner frontier, outer region and capacity segments for
            one model and parameter set, written as CSV or JSON
  validate  recompute closed forms through the Gaussian MI oracle (and
            optionally Monte Carlo) at finite state power; exit 4 on FAIL
  figure    emit the data files for a named figure preset, one file per
            curve (<preset>_inner.csv, <preset>_outer.csv,
            <preset>_segments.csv)

Exit codes: 0 success, 2 invalid arguments or unknown preset, 3 numerical
failure (the message names the failing operation), 4 validation failure.
Diagnostics go to stderr; stdout carries nothing when --out is set.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__, model1, sweeps, validate as validate_mod
from .errors import HelperNetError
from .output import build_header, build_payload, q_mode_str, render
from .powers import INFINITE, PowerConfig
from .presets import PRESETS

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_VALIDATION = 4

MODELS = ("m1", "m2-dedicated", "m2-full", "m3-k2", "m3-general")
VALIDATE_MODELS = ("m1", "m2-dedicated", "m2-full")


class UsageError(Exception):
    pass


class ComputeError(Exception):
    def __init__(self, op: str, cause: BaseException):
        super().__init__(f"{op}: {cause}")
        self.op = op
        self.cause = cause


def _run(op: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (HelperNetError, FloatingPointError, ZeroDivisionError,
            np.linalg.LinAlgError, ValueError) as exc:
        raise ComputeError(op, exc) from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helpernet",
        description="Rate regions and capacity segments for helper-assisted "
                    "parallel Gaussian networks (rates in bits, log base 2).")
    parser.add_argument("--version", action="version", version=f"helpernet {__version__}")
    sub = parser.add_subparsers(dest="command")

    def add_power_flags(p: argparse.ArgumentParser, with_q: bool = True) -> None:
        p.add_argument("--p0", type=float, required=True, help="helper power")
        p.add_argument("--p1", type=float, help="user 1 power")
        p.add_argument("--p2", type=float, help="user 2 power")
        p.add_argument("--p3", type=float, help="user 3 power")
        if with_q:
            p.add_argument("--q", default="inf",
                           help="state power: a positive number or 'inf' (default)")
        p.add_argument("--grid", type=int, default=2001, help="sweep resolution")
        p.add_argument("--seed", type=int, default=0, help="seed recorded in outputs")

    p_region = sub.add_parser("region", help="compute bounds and capacity segments")
    p_region.add_argument("model", choices=MODELS)
    add_power_flags(p_region)
    p_region.add_argument("--p00", type=float, default=0.0,
                          help="helper-message power for m2-full segments")
    p_region.add_argument("--format", choices=("csv", "json"), default=None,
                          help="output format; default: inferred from --out, else csv")
    p_region.add_argument("--out", type=Path, default=None, help="output path (stdout if unset)")

    p_val = sub.add_parser("validate", help="closed-form vs oracle vs Monte Carlo report")
    p_val.add_argument("model", choices=VALIDATE_MODELS)
    add_power_flags(p_val, with_q=False)
    p_val.add_argument("--q", default="1e8",
                       help="finite state power for the oracle (default 1e8)")
    p_val.add_argument("--beta-grid", type=int, default=11,
                       help="number of power splits checked (m1)")
    p_val.add_argument("--n-samples", type=int, default=100_000,
                       help="Monte Carlo sample count (0 disables MC rows)")
    p_val.add_argument("--alpha-override", type=float, default=None,
                       help="force this alpha instead of the optimized one (m1)")
    p_val.add_argument("--out", type=Path, default=None, help="report path (stdout if unset)")

    p_fig = sub.add_parser("figure", help="emit preset data files, one per curve")
    p_fig.add_argument("preset")
    p_fig.add_argument("--out-dir", type=Path, default=Path("."))
    p_fig.add_argument("--grid", type=int, default=2001)
    p_fig.add_argument("--seed", type=int, default=0)
    return parser


def _parse_q(text: str) -> float:
    if str(text).strip().lower() in ("inf", "infinite", "infinity"):
        return INFINITE
    try:
        q = float(text)
    except ValueError:
        raise UsageError(f"--q must be a number or 'inf', got {text!r}")
    if not q > 0 or math.isnan(q):
        raise UsageError(f"--q must be positive, got {text!r}")
    return q


def _powers_for(model: str, args) -> PowerConfig:
    q = _parse_q(args.q) if hasattr(args, "q") else INFINITE
    if model == "m1":
        if args.p1 is None:
            raise UsageError("model m1 needs --p1")
        return PowerConfig.single(args.p0, args.p1, q)
    if model in ("m2-dedicated", "m2-full"):
        if args.p1 is None or args.p2 is None:
            raise UsageError(f"model {model} needs --p1 and --p2")
        return PowerConfig.pair_single_state(args.p0, args.p1, args.p2, q)
    if model == "m3-k2":
        if args.p1 is None or args.p2 is None:
            raise UsageError("model m3-k2 needs --p1 and --p2")
        return PowerConfig.parallel(args.p0, (args.p1, args.p2), (q, q))
    users = []
    for v in (args.p1, args.p2, args.p3):
        if v is None:
            break
        users.append(v)
    if not users:
        raise UsageError("model m3-general needs --p1 (and optionally --p2, --p3)")
    return PowerConfig.parallel(args.p0, tuple(users), tuple(q for _ in users))


def _sections_for(model: str, powers: PowerConfig, q: float, grid: int, p00: float):
    if model == "m1":
        return _run("model1 sections", sweeps.model1_sections, powers, q, grid)
    if not math.isinf(q):
        raise UsageError(f"model {model} is characterized only for --q inf")
    if model == "m2-dedicated":
        return _run("model2 dedicated sections", sweeps.model2_dedicated_sections, powers, grid)
    if model == "m2-full":
        return _run("model2 full sections", sweeps.model2_full_sections, powers, grid, p00)
    if model == "m3-k2":
        return _run("model3 k2 sections", sweeps.model3_k2_sections, powers, grid)
    return _run("model3 general sections", sweeps.model3_general_sections, powers, powers.k, grid)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _cmd_region(args) -> int:
    powers = _powers_for(args.model, args)
    q = _parse_q(args.q)
    fmt = args.format
    if fmt is None:
        fmt = "json" if (args.out is not None and args.out.suffix.lower() == ".json") else "csv"
    inner, outer, segments, extras = _sections_for(args.model, powers, q, args.grid, args.p00)
    header = build_header(args.model, powers, q_mode_str(q), args.seed, args.grid)
    payload = build_payload(header, inner, outer, segments, extras)
    _emit(render(payload, fmt), args.out)
    return EXIT_OK


def _cmd_validate(args) -> int:
    powers = _powers_for(args.model, args)
    q = _parse_q(args.q)
    if math.isinf(q):
        raise UsageError("validate needs a finite --q (the oracle samples finite state power)")
    if args.model == "m1":
        rows = _run("model1 validation", validate_mod.model1_checks, powers, q,
                    args.beta_grid, args.seed, args.n_samples, args.alpha_override)
    else:
        if args.alpha_override is not None:
            raise UsageError("--alpha-override is an m1 check")
        rows = _run("model2 validation", validate_mod.model2_checks, powers, q,
                    args.model == "m2-full", max(args.beta_grid // 2, 3),
                    args.seed, args.n_samples)
    header = build_header(args.model, powers, q_mode_str(q), args.seed, args.beta_grid)
    _emit(validate_mod.render_report(header, rows), args.out)
    return EXIT_OK if validate_mod.all_passed(rows) else EXIT_VALIDATION


def _cmd_figure(args) -> int:
    preset = PRESETS.get(args.preset)
    if preset is None:
        names = ", ".join(sorted(PRESETS))
        print(f"helpernet: unknown preset {args.preset!r}; valid presets: {names}",
              file=sys.stderr)
        return EXIT_USAGE
    inner, outer, segments, extras = _sections_for(preset.model, preset.powers,
                                                   INFINITE, args.grid, 0.0)
    header = build_header(preset.model, preset.powers, "inf", args.seed, args.grid,
                          preset=preset.name, preset_source=preset.source)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for curve, payload in (
        ("inner", build_payload(header, inner, None, None, extras)),
        ("outer", build_payload(header, None, outer, None, extras)),
        ("segments", build_payload(header, None, None, segments or [], extras)),
    ):
        path = args.out_dir / f"{preset.name}_{curve}.csv"
        path.write_text(render(payload, "csv"))
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "region":
            return _cmd_region(args)
        if args.command == "validate":
            return _cmd_validate(args)
        return _cmd_figure(args)
    except UsageError as exc:
        print(f"helpernet: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ComputeError as exc:
        print(f"helpernet: numerical failure in {exc.op}: {exc.cause}", file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    sys.exit(main())
