"""Print e(n, k) for n <= N, once from the path recurrences and once by brute force."""

import argparse

from descent123.tables import eulerian_rows, oracle_eulerian


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--oracle-n", type=int, default=10)
    args = ap.parse_args()

    rows = eulerian_rows(args.max_n)
    width = max(len(str(c)) for r in rows for c in r.counts)
    print("n/k  " + " ".join(f"{k:>{width}}" for k in range(max(args.max_n, 1))))
    for r in rows:
        cells = " ".join(f"{c:>{width}}" for c in r.counts)
        agree = ""
        if r.n <= args.oracle_n:
            agree = "  (oracle agrees)" if oracle_eulerian(r.n) == r else "  (ORACLE DISAGREES)"
        print(f"{r.n:<4} {cells}{agree}")


if __name__ == "__main__":
    main()
