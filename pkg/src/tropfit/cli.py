"""Command-line front end.

Subcommands:

    gen-fixture OUT.csv                       write the bundled demo dataset
    fit poly INPUT.csv --n N [...]            polynomial fit, report on stdout
    fit rational INPUT.csv --n N --l L [...]  rational fit, report on stdout
    eval REPORT.json X [X ...]                evaluate a saved fit at points
    sample REPORT.json --from A --to B --steps K   evaluate on a uniform grid

Reports are JSON by default (``--output csv`` renders a flat key/value
table); eval and sample consume the JSON form.  Exit code is 0 on success
and 2 on any input error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Sequence

from .clustering import SampleSet
from .fitting import FitConfig, fit_polynomial, fit_rational
from .report import (
    FitReport,
    MODE_MAXPLUS,
    MODE_MAXTIMES,
    evaluator,
    load_samples,
    report_from_poly_fit,
    report_from_rational_fit,
    to_maxplus_samples,
)

FIXTURE_SIZE = 21


def fixture_curve(x: float) -> float:
    """The demo target: a nonconvex curve sampled on [0, 2]."""
    return 3.0 * (x - 1.0) ** 2 * math.sin(x) + 0.25


def fixture_rows() -> list[tuple[float, float]]:
    xs = [i / 10 for i in range(FIXTURE_SIZE)]
    return [(x, fixture_curve(x)) for x in xs]


def _cmd_gen_fixture(args: argparse.Namespace) -> int:
    lines = ["x,y"]
    lines += [f"{x:.4f},{y:.4f}" for x, y in fixture_rows()]
    Path(args.out).write_text("\n".join(lines) + "\n")
    return 0


def _emit_report(report: FitReport, output: str) -> None:
    if output == "csv":
        sys.stdout.write(report.to_csv())
    else:
        print(report.to_json())


def _cmd_fit_poly(args: argparse.Namespace) -> int:
    samples = load_samples(args.input)
    fit = fit_polynomial(to_maxplus_samples(samples, args.mode), args.n)
    _emit_report(report_from_poly_fit(fit, args.mode), args.output)
    return 0


def _cmd_fit_rational(args: argparse.Namespace) -> int:
    samples = load_samples(args.input)
    config = FitConfig(
        n=args.n, l=args.l, epsilon=args.epsilon, iteration_cap=args.max_iter
    )
    fit = fit_rational(to_maxplus_samples(samples, args.mode), config)
    _emit_report(report_from_rational_fit(fit, args.mode, args.n, args.l), args.output)
    return 0


def _load_report(path: str) -> FitReport:
    return FitReport.from_json(Path(path).read_text())


def _emit_curve(fn, points) -> None:
    rows = [(x, fn(x)) for x in points]  # evaluate fully before printing
    print("x,value")
    for x, value in rows:
        print(f"{x!r},{value!r}")


def _cmd_eval(args: argparse.Namespace) -> int:
    _emit_curve(evaluator(_load_report(args.report)), args.points)
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    if not args.start < args.stop:
        raise ValueError("--from must be less than --to")
    step = (args.stop - args.start) / (args.steps - 1)
    points = [args.start + i * step for i in range(args.steps)]
    _emit_curve(evaluator(_load_report(args.report)), points)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropfit",
        description="Fit max-plus polynomials and rational functions to data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-fixture", help="write the bundled demo dataset")
    gen.add_argument("out", help="output CSV path")
    gen.set_defaults(func=_cmd_gen_fixture)

    fit = sub.add_parser("fit", help="fit a function to a CSV dataset")
    fit_sub = fit.add_subparsers(dest="kind", required=True)

    def common_fit_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="two-column CSV of samples")
        p.add_argument("--n", type=int, required=True, help="numerator monomials")
        p.add_argument(
            "--mode",
            choices=[MODE_MAXPLUS, MODE_MAXTIMES],
            default=MODE_MAXPLUS,
            help="semifield of the data (default maxplus)",
        )
        p.add_argument(
            "--output", choices=["json", "csv"], default="json", help="report format"
        )

    poly = fit_sub.add_parser("poly", help="polynomial fit")
    common_fit_args(poly)
    poly.set_defaults(func=_cmd_fit_poly)

    rational = fit_sub.add_parser("rational", help="rational-function fit")
    common_fit_args(rational)
    rational.add_argument("--l", type=int, required=True, help="denominator monomials")
    rational.add_argument(
        "--epsilon", type=float, default=1e-4, help="squared-error tolerance"
    )
    rational.add_argument(
        "--max-iter", type=int, default=200, help="cap on alternation half-steps"
    )
    rational.set_defaults(func=_cmd_fit_rational)

    ev = sub.add_parser("eval", help="evaluate a saved fit at given points")
    ev.add_argument("report", help="fit report (JSON)")
    ev.add_argument("points", type=float, nargs="+", help="arguments to evaluate at")
    ev.set_defaults(func=_cmd_eval)

    sample = sub.add_parser("sample", help="evaluate a saved fit on a uniform grid")
    sample.add_argument("report", help="fit report (JSON)")
    sample.add_argument("--from", dest="start", type=float, required=True)
    sample.add_argument("--to", dest="stop", type=float, required=True)
    sample.add_argument("--steps", type=int, required=True)
    sample.set_defaults(func=_cmd_sample)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"tropfit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
