"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or bound error,
3 ``map`` given a permutation that contains 123.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from descent123.bijection import Not123AvoidingError, check_prop1, kappa, kappa_inverse
from descent123.checks import SUITES, run_suite
from descent123.config import BoundExceededError
from descent123.dyck import PathError, parse_path
from descent123.perm import PermutationError, parse_permutation
from descent123.series import specializations
from descent123.tables import (
    EULERIAN_FIELDS,
    TRISTAT_FIELDS,
    build_tables,
    eulerian_records,
    eulerian_rows,
    to_json,
    write_csv,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="descent123",
        description="Descents of 123-avoiding permutations via valleys and triple falls of Dyck paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="permutation -> Dyck path")
    p.add_argument("perm", help='one-line notation, e.g. "5 7 2 6 4 3 1"')
    p.add_argument("--stats", action="store_true", help="also print des, v, tf")

    p = sub.add_parser("unmap", help="Dyck path -> permutation")
    p.add_argument("path", help="U/D string")
    p.add_argument("--stats", action="store_true")

    p = sub.add_parser("eulerian", help="descent distribution e(n, k)")
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("tristat", help="joint valley / triple-fall counts")
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--irreducible", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=_nonneg, default=10)
    p.add_argument("--unsafe-bounds", action="store_true", help="lift the oracle size caps")
    p.add_argument("--direct", action="store_true", help="also expand the closed forms by division")

    p = sub.add_parser("specials", help="Catalan, Motzkin, Narayana and DDD-count specializations")
    p.add_argument("--max-n", type=_nonneg, default=10)
    return parser


def _print_stats(perm, out) -> None:
    c = check_prop1(perm)
    print(f"des={c.des} v={c.v} tf={c.tf} {'OK' if c.holds else 'MISMATCH'}", file=out)


def cmd_map(args, out) -> int:
    try:
        perm = parse_permutation(args.perm)
    except PermutationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        path = kappa(perm)
    except Not123AvoidingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    print(path, file=out)
    if args.stats:
        _print_stats(perm, out)
    return EXIT_OK


def cmd_unmap(args, out) -> int:
    try:
        path = parse_path(args.path)
    except PathError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    perm = kappa_inverse(path)
    print(perm, file=out)
    if args.stats:
        _print_stats(perm, out)
    return EXIT_OK


def cmd_eulerian(args, out) -> int:
    rows = eulerian_rows(args.max_n)
    if args.format == "csv":
        write_csv(out, EULERIAN_FIELDS, eulerian_records(rows))
    else:
        print(to_json("eulerian", args.max_n, EULERIAN_FIELDS, eulerian_records(rows)), file=out)
    return EXIT_OK


def cmd_tristat(args, out) -> int:
    a, b = build_tables(args.max_n)
    table = b if args.irreducible else a
    kind = f"tristat-{table.kind}"
    if args.format == "csv":
        write_csv(out, TRISTAT_FIELDS, table.records())
    else:
        print(to_json(kind, args.max_n, TRISTAT_FIELDS, table.records()), file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    try:
        reports = run_suite(args.suite, args.max_n, unsafe=args.unsafe_bounds, direct=args.direct)
    except BoundExceededError as e:
        print(f"error: {e} (use --unsafe-bounds to override)", file=sys.stderr)
        return EXIT_USAGE
    for r in reports:
        print(r.line(), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_specials(args, out) -> int:
    a, _ = build_tables(args.max_n)
    sp = specializations(a, args.max_n)
    print("catalan A(x,1,1): " + " ".join(map(str, sp.catalan)), file=out)
    print("motzkin A(x,1,0): " + " ".join(map(str, sp.motzkin)), file=out)
    for n, row in enumerate(sp.narayana):
        print(f"narayana yA(x,y,1) n={n}: " + " ".join(map(str, row)), file=out)
    for n, row in enumerate(sp.ddd_triangle):
        print(f"A092107 A(x,1,z) n={n}: " + " ".join(map(str, row)), file=out)
    return EXIT_OK


COMMANDS = {
    "map": cmd_map,
    "unmap": cmd_unmap,
    "eulerian": cmd_eulerian,
    "tristat": cmd_tristat,
    "check": cmd_check,
    "specials": cmd_specials,
}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    return COMMANDS[args.command](args, out)


if __name__ == "__main__":
    sys.exit(main())
