"""Run every identity check at increasing truncation orders and time them."""

import argparse
import time

from descent123.series import (
    check_functional_equations,
    check_specializations,
    check_theorem5,
    check_theorem6,
)
from descent123.tables import build_tables, eulerian_rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--orders", type=int, nargs="+", default=[10, 20, 30])
    ap.add_argument("--direct", action="store_true")
    args = ap.parse_args()

    for order in args.orders:
        t0 = time.perf_counter()
        a, b = build_tables(order)
        reports = (
            check_functional_equations(a, b, order)
            + check_theorem5(a, order, direct=args.direct)
            + check_theorem6(a, eulerian_rows(order, a), order, direct=args.direct)
            + check_specializations(a, order, oracle_n=min(order, 10))
        )
        for r in reports:
            print(r.line())
        print(f"# order {order}: {time.perf_counter() - t0:.2f}s\n")


if __name__ == "__main__":
    main()
