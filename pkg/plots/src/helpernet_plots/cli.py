"""Command-line wrapper: render one figure or a directory of preset files.

Exit codes: 0 success, 1 parse or rendering failure (the message names the
offending file and line), 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .datafile import DataFileError
from .render import PlotSpec, render


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helpernet-plots",
                                     description="Render helpernet data files as figures.")
    sub = parser.add_subparsers(dest="command")

    p_render = sub.add_parser("render", help="render one figure from data files")
    p_render.add_argument("--data", type=Path, action="append", required=True,
                          help="input CSV/JSON data file (repeatable)")
    p_render.add_argument("--out", type=Path, required=True, help="output PNG/SVG path")
    p_render.add_argument("--title", default="")
    p_render.add_argument("--no-annotate", action="store_true")

    p_batch = sub.add_parser("batch", help="render every <preset>_*.csv group in a directory")
    p_batch.add_argument("--dir", type=Path, required=True)
    p_batch.add_argument("--out-dir", type=Path, default=None)
    p_batch.add_argument("--format", choices=("png", "svg"), default="png")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else 2
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.command == "render":
            spec = PlotSpec(tuple(args.data), args.out, args.title,
                            annotate=not args.no_annotate)
            render(spec)
            return 0
        groups: dict[str, list[Path]] = {}
        for path in sorted(args.dir.glob("*_*.csv")):
            preset = path.stem.rsplit("_", 1)[0]
            groups.setdefault(preset, []).append(path)
        if not groups:
            print(f"helpernet-plots: no <preset>_<curve>.csv files in {args.dir}",
                  file=sys.stderr)
            return 2
        out_dir = args.out_dir or args.dir
        for preset, paths in groups.items():
            out = out_dir / f"{preset}.{args.format}"
            render(PlotSpec(tuple(paths), out, title=preset))
        return 0
    except (DataFileError, OSError) as exc:
        print(f"helpernet-plots: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
