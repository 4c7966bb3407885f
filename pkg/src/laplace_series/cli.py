"""Command-line entry point.

Exit status: 0 success, 1 a verification mismatch, 2 a usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import golden
from .exact_core import format_rational
from .moments import DomainError, mgf_closed, mgf_product, moment, moment_table, mgf_series_coefficients
from .montecarlo import (
    DEFAULT_MGF_POINTS,
    DEFAULT_ORDERS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_SHARDS,
    DEFAULT_TRUNCATION,
    SimConfig,
    parse_float_list,
    parse_int_list,
    simulate,
    summarize,
)
from .special_numbers import bernoulli, check_identity_eq8, euler

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

FORMATS = ("plain", "json", "csv")


class Output:
    """Collects records and renders them in the requested format."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.records: list[dict] = []
        self.lines: list[str] = []

    def add(self, record: dict, line: str) -> None:
        self.records.append(record)
        self.lines.append(line)

    def render(self) -> str:
        if self.fmt == "json":
            return json.dumps(self.records, indent=2) + "\n"
        if self.fmt == "csv":
            return _to_csv(self.records)
        return "".join(line + "\n" for line in self.lines)


def _to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    if records:
        fields: list[str] = []
        for r in records:
            fields.extend(k for k in r if k not in fields)
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow(r)
    return buf.getvalue()


def _number_cmd(kind: str, fn: Callable[[int], Fraction]):
    def run(args: argparse.Namespace, out: Output) -> int:
        indices = range(args.n + 1) if args.upto else [args.n]
        for n in indices:
            value = format_rational(fn(n))
            out.add({"kind": kind, "n": n, "value": value}, value if not args.upto else f"{n} {value}")
        return EXIT_OK

    return run


def cmd_check_eq8(args: argparse.Namespace, out: Output) -> int:
    total = args.max + 1
    failures = [n for n in range(total) if not check_identity_eq8(n)]
    passed = total - len(failures)
    status = "OK" if not failures else "FAIL"
    out.add(
        {"kind": "check-eq8", "max": args.max, "passed": passed, "total": total, "failures": failures},
        f"{status} {passed}/{total}",
    )
    return EXIT_OK if not failures else EXIT_MISMATCH


def _moment_record(entry, kind: str) -> dict:
    return {"kind": kind, **entry.as_record()}


def cmd_moment(args: argparse.Namespace, out: Output) -> int:
    entry = moment(args.m)
    out.add(_moment_record(entry, "moment"), format_rational(entry.exact))
    return EXIT_OK


def cmd_table(args: argparse.Namespace, out: Output) -> int:
    for entry in moment_table(args.max):
        out.add(
            _moment_record(entry, "table-row"),
            f"{entry.order:4d}  {format_rational(entry.exact):>28s}  {entry.approx!r}",
        )
    return EXIT_OK


def cmd_series(args: argparse.Namespace, out: Output) -> int:
    series = mgf_series_coefficients(args.order)
    fact = 1
    for d, c in enumerate(series.coefficients):
        if d:
            fact *= d
        rec = {
            "kind": "series-coefficient",
            "degree": d,
            "coefficient": format_rational(c),
            "moment": format_rational(c * fact),
        }
        out.add(rec, f"{d:4d}  {rec['coefficient']:>32s}  {rec['moment']}")
    return EXIT_OK


def cmd_mgf(args: argparse.Namespace, out: Output) -> int:
    closed = mgf_closed(args.t)
    rec: dict = {"kind": "mgf-eval", "t": args.t, "closed": closed, "terms": None, "product": None, "rel_diff": None}
    line = f"t={args.t!r} closed={closed!r}"
    if args.terms is not None:
        prod = mgf_product(args.t, args.terms)
        rel = abs(prod - closed) / closed
        rec.update(terms=args.terms, product=prod, rel_diff=rel)
        line += f" product[{args.terms}]={prod!r} rel_diff={rel:.3e}"
    out.add(rec, line)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace, out: Output) -> int:
    config = SimConfig(
        master_seed=args.seed,
        samples=args.samples,
        truncation=args.truncation,
        shards=args.shards,
        moment_orders=parse_int_list(args.orders),
        mgf_points=parse_float_list(args.mgf_points),
        antithetic=args.antithetic,
    )
    result = simulate(config, workers=args.workers)
    if out.fmt == "json":
        out.records.append(result.as_record())
        return EXIT_OK
    reports = result.moments + result.mgf
    lines = summarize(reports)
    for r, line in zip(reports, lines):
        out.add(r.as_record(), line)
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace, out: Output) -> int:
    mismatches = 0
    for m, expected in golden.MOMENTS.items():
        got = moment(m).exact
        ok = got == expected
        mismatches += not ok
        out.add(
            {
                "kind": "table-row",
                "order": m,
                "exact": format_rational(got),
                "expected": format_rational(expected),
                "match": ok,
            },
            f"{'OK  ' if ok else 'DIFF'} E[Y^{m}] = {format_rational(got)}"
            + ("" if ok else f" (expected {format_rational(expected)})"),
        )
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="laplace-series",
        description="Exact moments of sum_k X_k/(2 k pi) for i.i.d. Laplace(0,1) X_k, with series and Monte Carlo checks.",
    )
    parser.add_argument("--format", choices=FORMATS, default="plain", help="output format (default: plain)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    for name, fn in (("bernoulli", bernoulli), ("euler", euler)):
        p = sub.add_parser(name, parents=[fmt], help=f"exact {name} number of index N")
        p.add_argument("n", type=_nonneg, metavar="N")
        p.add_argument("--upto", action="store_true", help="list every index 0..N")
        p.set_defaults(func=_number_cmd(name, fn))

    p = sub.add_parser("check-eq8", parents=[fmt], help="verify the Bernoulli-Euler relation for 0..MAX")
    p.add_argument("--max", type=_nonneg, default=200)
    p.set_defaults(func=cmd_check_eq8)

    p = sub.add_parser("moment", parents=[fmt], help="exact moment E[Y^M]")
    p.add_argument("m", type=_positive, metavar="M")
    p.set_defaults(func=cmd_moment)

    p = sub.add_parser("table", parents=[fmt], help="moments of orders 1..MAX")
    p.add_argument("max", type=_positive, metavar="MAX")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", parents=[fmt], help="exact MGF Taylor coefficients through degree N")
    p.add_argument("--order", type=_positive, required=True, metavar="N")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("mgf", parents=[fmt], help="evaluate the MGF in closed form and as a finite product")
    p.add_argument("--t", type=float, required=True, metavar="T")
    p.add_argument("--terms", type=_positive, default=None, metavar="K")
    p.set_defaults(func=cmd_mgf)

    p = sub.add_parser("simulate", parents=[fmt], help="Monte Carlo estimates of moments and MGF")
    p.add_argument("--seed", type=_u64, default=DEFAULT_SEED, help=f"master seed (default {DEFAULT_SEED:#x})")
    p.add_argument("--samples", type=_positive, default=DEFAULT_SAMPLES)
    p.add_argument("--truncation", type=_positive, default=DEFAULT_TRUNCATION)
    p.add_argument("--shards", type=_positive, default=DEFAULT_SHARDS)
    p.add_argument("--orders", default=",".join(map(str, DEFAULT_ORDERS)))
    p.add_argument("--mgf-points", default=",".join(map(repr, DEFAULT_MGF_POINTS)))
    p.add_argument("--antithetic", action="store_true", help="negate every Laplace draw")
    p.add_argument(
        "--workers", type=_positive, default=min(DEFAULT_SHARDS, os.cpu_count() or 1),
        help="worker processes; does not change the results",
    )
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("reproduce-paper", parents=[fmt], help="compare moments of orders 2..20 with the published values")
    p.set_defaults(func=cmd_reproduce)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out = Output(args.format)
    try:
        status = args.func(args, out)
    except (DomainError, ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(out.render())
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
