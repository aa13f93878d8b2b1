"""Line-oriented command-line front end.

Commands read and write one object per line so they compose under pipes::

    dyckstat enumerate --kind dyck --n 4 | dyckstat map --bijection bjs \\
        | dyckstat map --bijection fz

Exit codes: 0 on success, 1 when ``verify`` finds a failing property,
2 on usage errors and on input lines that do not parse.
"""
from __future__ import annotations

import argparse
import sys
from typing import Callable, Iterable, TextIO

from . import enumeration
from .bijections import bjs_forward, bjs_inverse, fz_forward, fz_inverse
from .paths import area_profile, parse_dyck, parse_motzkin, render_ascii
from .permutations import format_permutation, parse_permutation
from .statistics import (
    double_centraliser_predicate,
    format_set,
    gorenstein_predicate,
    set_D,
    set_F,
    set_N,
    statistic_double_deficiencies,
)
from .verify import TARGETS, verify

ENUMERATORS = {
    "dyck": enumeration.enumerate_dyck,
    "motzkin": enumeration.enumerate_motzkin,
    "riordan": enumeration.enumerate_riordan,
    "bicoloured-motzkin": enumeration.enumerate_bicoloured_motzkin,
    "av321": enumeration.enumerate_av321,
}

# (bijection, direction) -> (parser, map, formatter)
MAPS = {
    ("bjs", "forward"): (parse_dyck, bjs_forward, format_permutation),
    ("bjs", "inverse"): (parse_permutation, bjs_inverse, str),
    ("fz", "forward"): (parse_permutation, fz_forward, str),
    ("fz", "inverse"): (parse_motzkin, fz_inverse, format_permutation),
}

STATISTICS = {
    "D": (parse_dyck, lambda p: format_set(set_D(area_profile(p)))),
    "F": (parse_dyck, lambda p: format_set(set_F(area_profile(p)))),
    "N": (parse_dyck, lambda p: format_set(set_N(p))),
    "double-deficiencies": (
        parse_permutation,
        lambda p: str(statistic_double_deficiencies(p)),
    ),
    "gorenstein": (parse_dyck, lambda p: str(int(gorenstein_predicate(p)))),
    "double-centraliser": (
        parse_dyck,
        lambda p: str(int(double_centraliser_predicate(p))),
    ),
}


class InputError(Exception):
    def __init__(self, lineno: int, text: str, reason: Exception):
        super().__init__(f"line {lineno}: {text!r}: {reason}")


def _lines(stream: TextIO) -> Iterable[tuple[int, str]]:
    for lineno, line in enumerate(stream, 1):
        yield lineno, line.rstrip("\r\n")


def _process(
    stdin: TextIO, stdout: TextIO, convert: Callable[[str], str]
) -> None:
    for lineno, line in _lines(stdin):
        try:
            out = convert(line)
        except (ValueError, AssertionError) as exc:
            raise InputError(lineno, line, exc) from exc
        stdout.write(out + "\n")


def cmd_enumerate(args, stdin, stdout) -> int:
    for obj in ENUMERATORS[args.kind](args.n):
        stdout.write(str(obj) + "\n")
    return 0


def cmd_map(args, stdin, stdout) -> int:
    parse, func, fmt = MAPS[args.bijection, args.direction]
    _process(stdin, stdout, lambda line: fmt(func(parse(line))))
    return 0


def cmd_stats(args, stdin, stdout) -> int:
    parse, stat = STATISTICS[args.statistic]

    def convert(line):
        obj = parse(line)
        return f"{obj} => {stat(obj)}"

    _process(stdin, stdout, convert)
    return 0


def cmd_verify(args, stdin, stdout) -> int:
    report = verify(args.max_n, args.target, args.jobs)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.to_json_lines())
    stdout.write(report.summary() + "\n")
    return 0 if report.passed else 1


def cmd_render(args, stdin, stdout) -> int:
    def convert(line):
        path = parse_dyck(line)
        marks = None
        if args.crosses:
            marks = list(enumerate(bjs_forward(path).images, 1))
        return render_ascii(path, marks) + "\n"

    _process(stdin, stdout, convert)
    return 0


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckstat",
        description="Dyck path statistics, bijections and exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all objects of one family and size")
    p.add_argument("--kind", required=True, choices=sorted(ENUMERATORS))
    p.add_argument("--n", required=True, type=_nonnegative)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply a bijection to each input line")
    p.add_argument("--bijection", required=True, choices=["bjs", "fz"])
    p.add_argument("--direction", default="forward", choices=["forward", "inverse"])
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("stats", help="print 'object => value' for each input line")
    p.add_argument("--statistic", required=True, choices=list(STATISTICS))
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="check the lemmas and conjectures exhaustively")
    p.add_argument("--target", default="all", choices=TARGETS)
    p.add_argument("--max-n", default=10, type=_nonnegative)
    p.add_argument("--jobs", default=1, type=_positive)
    p.add_argument("--report", help="write the JSON-lines report to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw each input Dyck word as an ASCII grid")
    p.add_argument("--crosses", action="store_true", help="overlay the BJS permutation")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, stdin, stdout)
    except InputError as exc:
        print(f"dyckstat {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
