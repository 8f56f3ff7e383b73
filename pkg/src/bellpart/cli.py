"""Command-line interface.

Subcommands: table, verify, enumerate, oracle-check, dobinski, egf-check.
Exit codes: 0 success/verified, 1 verification failure, 2 usage error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from bellpart import dobinski, partitions, series, triangles
from bellpart.triangles import Family

_TABLE_FAMILIES = {
    "stirling": (Family.CLASSICAL, True),
    "stirling-b": (Family.TYPE_B, True),
    "stirling-d": (Family.TYPE_D, True),
    "bell": (Family.CLASSICAL, False),
    "bell-b": (Family.TYPE_B, False),
    "bell-d": (Family.TYPE_D, False),
}

_ENUM_FAMILIES = {
    "classical": Family.CLASSICAL,
    "b": Family.TYPE_B,
    "d": Family.TYPE_D,
}

_DOBINSKI_FN = {
    "a": (dobinski.dobinski_a, triangles.bell_a),
    "b": (dobinski.dobinski_b, triangles.bell_b),
    "d": (dobinski.dobinski_d, triangles.bell_d),
}


def cmd_table(args) -> int:
    family, is_triangle = _TABLE_FAMILIES[args.family]
    sep = "\t" if args.format == "tsv" else " "
    for n in range(args.rows + 1):
        if is_triangle:
            cells = [triangles.stirling(family, n, k) for k in range(n + 1)]
            if args.format == "json":
                import json

                print(json.dumps({"n": n, "cells": cells}, separators=(",", ":")))
            else:
                print(sep.join(str(c) for c in cells))
        else:
            value = triangles.bell(family, n)
            if args.format == "json":
                import json

                print(json.dumps({"n": n, "value": value}, separators=(",", ":")))
            else:
                print(f"{n}{sep}{value}")
    return 0


def cmd_verify(args) -> int:
    ids = triangles.IDENTITY_IDS if args.identity == "all" else (args.identity,)
    ok = True
    for ident in ids:
        report = triangles.verify_identity(ident, args.max_n)
        if report.status:
            print(f"{ident}: PASS (n <= {args.max_n})")
            if report.values is not None and args.identity != "all":
                for n, value in report.values:
                    print(f"  n={n} lhs=rhs={value}")
        else:
            ok = False
            n, k, lhs, rhs = report.first_failure
            where = f"n={n}" if k is None else f"n={n} k={k}"
            print(f"{ident}: FAIL at {where}: lhs={lhs} rhs={rhs}")
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    family = _ENUM_FAMILIES[args.family]
    if family is Family.CLASSICAL:
        stream = partitions.enum_classical(args.n)
        size = lambda p: len(p.blocks)
    else:
        stream = partitions.enum_signed(args.n, family)
        size = lambda p: p.num_pairs
    count = 0
    for p in stream:
        if args.pairs is not None and size(p) != args.pairs:
            continue
        count += 1
        print(p.render_text() if args.format == "text" else p.render_json())
    print(f"count {count}")
    return 0


def cmd_oracle_check(args) -> int:
    ok = True
    for n in range(args.n_max + 1):
        n_ok = True
        for family in Family:
            counts = partitions.count_by_pairs(n, family)
            expected = [triangles.stirling(family, n, k) for k in range(n + 1)]
            if counts != expected:
                n_ok = False
                print(f"n={n} family={family.value}: MISMATCH {counts} != {expected}")
        if n >= 1:
            defect = partitions.count_single_positive_zero_block(n)
            expected_defect = triangles.bell_b(n) - triangles.bell_d(n)
            if defect != expected_defect:
                n_ok = False
                print(f"n={n} defect: MISMATCH {defect} != {expected_defect}")
        if n_ok:
            print(
                f"n={n} ok: A={triangles.bell_a(n)} B={triangles.bell_b(n)} "
                f"D={triangles.bell_d(n)}"
            )
        ok = ok and n_ok
    print("oracle-check: " + ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def cmd_dobinski(args, parser: argparse.ArgumentParser) -> int:
    try:
        width = Fraction(args.width)
        if width <= 0:
            raise ValueError
    except (ValueError, ZeroDivisionError):
        parser.error(f"invalid width: {args.width!r}")
    fn, exact_fn = _DOBINSKI_FN[args.family]
    interval = fn(args.n, width)
    exact = exact_fn(args.n)
    print(f"lo {interval.lo}")
    print(f"hi {interval.hi}")
    ok = interval.contains(exact)
    if width <= Fraction(1, 2):
        rounded = round(interval.midpoint)
        ok = ok and rounded == exact
        print(f"rounded {rounded}")
    print("OK" if ok else "FAIL")
    return 0 if ok else 1


def cmd_egf_check(args) -> int:
    ok = True
    for family, bell_fn in (
        (Family.CLASSICAL, triangles.bell_a),
        (Family.TYPE_B, triangles.bell_b),
        (Family.TYPE_D, triangles.bell_d),
    ):
        values = series.egf_coefficients(family, args.order)
        expected = [bell_fn(n) for n in range(args.order + 1)]
        status = values == expected
        ok = ok and status
        print(
            f"bell-{family.value}: {','.join(str(v) for v in values)} "
            + ("OK" if status else "MISMATCH")
        )
    k_max = min(args.order, 10)
    columns = [series.egf_stirling_d_column(k, args.order) for k in range(k_max + 1)]
    for k, col in enumerate(columns):
        expected = [triangles.stirling_d(n, k) for n in range(args.order + 1)]
        if col != expected:
            ok = False
            print(f"stirling-d column k={k}: MISMATCH")
    if k_max == args.order:
        for n in range(args.order + 1):
            total = sum(columns[k][n] for k in range(min(n, k_max) + 1))
            if total != triangles.bell_d(n):
                ok = False
                print(f"column sum mismatch at n={n}")
    print("egf-check: " + ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellpart",
        description="Exact Bell/Stirling numbers of types classical, B and D, "
        "with enumeration, series and interval cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print a Stirling triangle or Bell sequence")
    p.add_argument("family", choices=sorted(_TABLE_FAMILIES))
    p.add_argument("--rows", type=int, required=True, metavar="N")
    p.add_argument("--format", choices=["tsv", "json", "text"], default="tsv")

    p = sub.add_parser("verify", help="check identities by exact arithmetic")
    p.add_argument("identity", choices=list(triangles.IDENTITY_IDS) + ["all"])
    p.add_argument("--max-n", type=int, required=True, dest="max_n")

    p = sub.add_parser("enumerate", help="stream partitions")
    p.add_argument("family", choices=sorted(_ENUM_FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("--pairs", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("oracle-check", help="enumeration vs recurrence counts")
    p.add_argument("n_max", type=int)

    p = sub.add_parser("dobinski", help="interval evaluation of the explicit formulas")
    p.add_argument("family", choices=sorted(_DOBINSKI_FN))
    p.add_argument("n", type=int)
    p.add_argument("width", help="rational width target, e.g. 1/2")

    p = sub.add_parser("egf-check", help="generating-function coefficients vs exact values")
    p.add_argument("order", type=int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        if args.rows < 0:
            parser.error("--rows must be >= 0")
        return cmd_table(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "enumerate":
        if args.n < 0:
            parser.error("n must be >= 0")
        return cmd_enumerate(args)
    if args.command == "oracle-check":
        if args.n_max < 0:
            parser.error("n_max must be >= 0")
        return cmd_oracle_check(args)
    if args.command == "dobinski":
        return cmd_dobinski(args, parser)
    if args.command == "egf-check":
        if args.order < 0:
            parser.error("order must be >= 0")
        return cmd_egf_check(args)
    parser.error(f"unknown command {args.command}")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
