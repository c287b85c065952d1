#!/usr/bin/env python3
"""Reproduce the S_n / R_n table and the bound chain, optionally past n = 10.

Usage:
    python scripts/reproduce_table.py [--max-n 12] [--parallel 4] [--csv out.csv]
"""

from __future__ import annotations

import argparse
import time

from subtree_iso.extremal import table, table_csv, table_text

PUBLISHED_S = [1, 2, 3, 4, 6, 8, 11, 16, 23, 33]
PUBLISHED_R = [1, 2, 3, 5, 7, 11, 16, 24, 34, 54]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--parallel", type=int, default=1)
    ap.add_argument("--csv", metavar="PATH")
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = table(args.max_n, parallel=args.parallel)
    print(table_text(rows))
    for row in rows[:10]:
        tag = "match" if (row.S.value, row.R.value) == (
            PUBLISHED_S[row.n - 1], PUBLISHED_R[row.n - 1]) else "MISMATCH"
        print(f"n={row.n:2d}  S={row.S.value:4d}  R={row.R.value:4d}  published: {tag}")
    print(f"\n{len(rows)} rows in {time.perf_counter() - t0:.1f}s")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(table_csv(rows))


if __name__ == "__main__":
    main()
