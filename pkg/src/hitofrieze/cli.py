"""Command-line entry point.

Exit codes: 0 success, 1 witness absent, 2 theorem violation or internal
inconsistency, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import SignatureNotInCatalogue, UnknownLabel, catalogue, classify, parse_label
from .pattern import DegenerateHeight, FriezePattern, PatternSyntaxError, dual, new_frieze, read_patterns
from .render import RenderOptions, render_ascii, render_svg
from .theorems import enumerate_patterns, find_witness, verify_theorems, write_census_csv
from .word import InvalidWord

EXIT_OK, EXIT_NONE, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_pattern_args(sp, allow_file=True):
    sp.add_argument("--x", help="repeating unit of the vertical-line word, e.g. 1000110")
    sp.add_argument("--y", help="horizontal-line word, e.g. 100110 (length >= 2)")
    if allow_file:
        sp.add_argument("--file", type=Path, help="read patterns from lines of the form 'x=<bits> y=<bits>'")


def _add_bounds(sp):
    sp.add_argument("--max-x", type=int, default=8)
    sp.add_argument("--max-y", type=int, default=7)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hitofrieze", description="Two-sided hitomezashi frieze symmetry toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("classify", help="classify a pattern among the 31 two-sided frieze groups")
    _add_pattern_args(sp)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("render", help="draw both sides of a pattern")
    _add_pattern_args(sp, allow_file=False)
    sp.add_argument("--periods", type=int, default=2)
    sp.add_argument("--format", choices=("svg", "ascii"), default="ascii")
    sp.add_argument("--cell-size", type=float, default=20.0)
    sp.add_argument("--gap-rows", type=int, default=1)
    sp.add_argument("--out", type=Path)

    sp = sub.add_parser("dual", help="words of the pattern on the reverse side")
    _add_pattern_args(sp)

    sp = sub.add_parser("enumerate", help="exhaustive census as CSV")
    _add_bounds(sp)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", type=Path)

    sp = sub.add_parser("verify-theorems", help="check the impossibility theorems by census")
    _add_bounds(sp)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("witness", help="first census pattern realising a group")
    sp.add_argument("--group", required=True)
    _add_bounds(sp)

    sp = sub.add_parser("catalogue", help="list the 31 groups with their realization classes")
    sp.add_argument("--json", action="store_true")
    return parser


def _patterns(args) -> list[FriezePattern]:
    if getattr(args, "file", None) is not None:
        if args.x or args.y:
            raise UsageError("give either --file or --x/--y, not both")
        with open(args.file, encoding="utf-8") as fh:
            return list(read_patterns(fh))
    if not args.x or not args.y:
        raise UsageError("--x and --y are required")
    return [new_frieze(args.x, args.y)]


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _check_bounds(args) -> None:
    if args.max_x < 1 or args.max_y < 2:
        raise UsageError("need --max-x >= 1 and --max-y >= 2")


def _run(args) -> int:
    cmd = args.command
    if cmd == "classify":
        for p in _patterns(args):
            r = classify(p)
            print(r.to_json() if args.json else r.label)
        return EXIT_OK
    if cmd == "render":
        (p,) = _patterns(args)
        if args.periods < 1 or args.cell_size <= 0 or args.gap_rows < 0:
            raise UsageError("--periods >= 1, --cell-size > 0 and --gap-rows >= 0 required")
        opts = RenderOptions(periods=args.periods, cell_size=args.cell_size, gap_rows=args.gap_rows)
        _emit(render_svg(p, opts) if args.format == "svg" else render_ascii(p, opts), args.out)
        return EXIT_OK
    if cmd == "dual":
        for p in _patterns(args):
            print(dual(p))
        return EXIT_OK
    if cmd == "enumerate":
        _check_bounds(args)
        rows = enumerate_patterns(args.max_x, args.max_y, args.workers)
        if args.out is None:
            write_census_csv(rows, sys.stdout)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                write_census_csv(rows, fh)
        return EXIT_OK
    if cmd == "verify-theorems":
        _check_bounds(args)
        report = verify_theorems(args.max_x, args.max_y, args.workers)
        print(report.to_json() if args.json else report.summary())
        return EXIT_OK if report.ok else EXIT_VIOLATION
    if cmd == "witness":
        _check_bounds(args)
        p = find_witness(args.group, args.max_x, args.max_y)
        print("none" if p is None else p)
        return EXIT_OK if p is not None else EXIT_NONE
    if cmd == "catalogue":
        entries = catalogue()
        if args.json:
            print(json.dumps([e.to_record() for e in entries], indent=2))
        else:
            for e in entries:
                print(f"{e.label:10s} {e.realization_class.value}")
        return EXIT_OK
    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "group", None) is not None:
        try:
            args.group = parse_label(args.group)
        except UnknownLabel as exc:
            print(f"hitofrieze: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return _run(args)
    except (UsageError, InvalidWord, DegenerateHeight, PatternSyntaxError, UnknownLabel) as exc:
        print(f"hitofrieze: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hitofrieze: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SignatureNotInCatalogue as exc:
        print(f"hitofrieze: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
