"""Command-line front end.

    ccgrowth ball affine:A2 6
    ccgrowth rlen affine:A2 "s1 s2 s1"
    ccgrowth class-growth klein "b" 32 --format csv

Exit codes: 0 success, 2 usage or parse error, 3 element budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .coxeter import AffineCoxeterGroup, build_affine_group, project_to_finite
from .growth import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    DegenerateSeries,
    GrowthSeries,
    ball_enumerate,
    class_growth_series,
    conjugacy_descriptor,
    estimate_degree,
    evaluate_word,
    exact_degree,
    growth_json,
)
from .movement import reflection_length
from .roots import UnsupportedTypeError
from .vab import build_klein_bottle, build_sign_flip_group

EXIT_USAGE = 2
EXIT_RESOURCE = 3

_AFFINE = re.compile(r"affine:([A-Za-z])(\d+)")
_SIGNFLIP = re.compile(r"signflip:d=(\d+)")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument parser whose errors are a single diagnostic line."""

    def error(self, message):
        self.exit(EXIT_USAGE, f"ccgrowth: error: {message}\n")


def parse_group_spec(raw: str):
    """Build the group named by ``affine:<T><n>``, ``signflip:d=<d>`` or ``klein``."""
    m = _AFFINE.fullmatch(raw)
    if m:
        try:
            return build_affine_group(m.group(1).upper(), int(m.group(2)))
        except UnsupportedTypeError as exc:
            raise UsageError(str(exc)) from None
    m = _SIGNFLIP.fullmatch(raw)
    if m:
        d = int(m.group(1))
        if d < 1:
            raise UsageError("signflip needs d >= 1")
        return build_sign_flip_group(d)
    if raw == "klein":
        return build_klein_bottle()
    raise UsageError(f"unknown group spec {raw!r}; use affine:<TYPE><RANK>, signflip:d=<d> or klein")


def parse_word(group, text: str) -> list[str]:
    tokens = text.split()
    for t in tokens:
        if t not in group.generators:
            raise UsageError(f"unknown generator {t!r}; expected one of {' '.join(group.generators)}")
    return tokens


def _radius(args) -> int:
    n = args.radius if args.radius is not None else args.n
    if n is None:
        raise UsageError("a radius is required (positional or --radius)")
    if n < 0:
        raise UsageError("radius must be nonnegative")
    return n


def _series_output(series: GrowthSeries, fmt: str, payload: str) -> str:
    return series.to_csv() if fmt == "csv" else payload


def cmd_ball(args) -> str:
    group = parse_group_spec(args.spec)
    n = _radius(args)
    counts = ball_enumerate(group, n, args.budget).counts()
    series = GrowthSeries(tuple(counts), f"ball sizes of {args.spec}")
    payload = json.dumps({"schema": 1, "group": args.spec, "counts": counts}, indent=2) + "\n"
    return _series_output(series, args.format or "csv", payload)


def cmd_rlen(args) -> str:
    group = parse_group_spec(args.spec)
    if not isinstance(group, AffineCoxeterGroup):
        raise UsageError("reflection length requires a Coxeter group")
    w = evaluate_word(group, parse_word(group, args.word))
    return f"{reflection_length(group, w)}\n"


def cmd_class_growth(args) -> str:
    group = parse_group_spec(args.spec)
    n = _radius(args)
    if n < 1:
        raise UsageError("class-growth needs N >= 1")
    tokens = parse_word(group, args.word)
    w = evaluate_word(group, tokens)
    desc = conjugacy_descriptor(group, w)
    series = class_growth_series(group, w, n, args.budget, desc=desc)
    degree = exact_degree(desc)
    try:
        est = estimate_degree(series)
    except DegenerateSeries:
        est = None
    extra = None
    if isinstance(group, AffineCoxeterGroup):
        rl = reflection_length(group, project_to_finite(w))
        extra = {"reflection_length_of_elliptic_part": rl, "degree_matches_rlen": rl == degree}
    payload = growth_json(args.spec, tokens, series, degree, est, extra)
    return _series_output(series, args.format or "json", payload)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ccgrowth", description="Conjugacy class growth in virtually abelian groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_radius=True):
        sp.add_argument("spec", help="affine:<TYPE><RANK>, signflip:d=<d> or klein")
        if with_radius:
            sp.add_argument("--radius", type=int, help="ball radius (alternative to the positional N)")
            sp.add_argument("--format", choices=("csv", "json"))
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of ball elements")
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("ball", help="ball sizes for radii 0..N")
    common(sp)
    sp.add_argument("n", type=int, nargs="?")
    sp.set_defaults(func=cmd_ball)

    sp = sub.add_parser("rlen", help="reflection length of a word")
    common(sp, with_radius=False)
    sp.add_argument("word", help='space-separated generators, e.g. "s1 s2 s1"')
    sp.set_defaults(func=cmd_rlen)

    sp = sub.add_parser("class-growth", help="conjugacy class growth series")
    common(sp)
    sp.add_argument("word", help='space-separated generators, e.g. "s1 s2" or "t1^-1 s1"')
    sp.add_argument("n", type=int, nargs="?")
    sp.set_defaults(func=cmd_class_growth)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a parse error already reported
        return exc.code
    try:
        text = args.func(args)
    except UsageError as exc:
        print(f"ccgrowth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"ccgrowth: error: {exc}; raise it with --budget", file=sys.stderr)
        return EXIT_RESOURCE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
