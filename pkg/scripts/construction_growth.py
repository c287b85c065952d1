#!/usr/bin/env python3
"""ns(C_n) against the guaranteed count and 2*5^(n/4-2), per residue class.

Usage:
    python scripts/construction_growth.py [--max-n 28]
"""

from __future__ import annotations

import argparse

from subtree_iso import exact
from subtree_iso.counting import ns
from subtree_iso.paperlab import build_construction, construction_bound


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=28)
    args = ap.parse_args()
    print(f"{'n':>3} {'m':>2} {'ns(C_n)':>9} {'guaranteed':>10} {'2*5^(n/4-2)':>12} "
          f"{'ns/5^(n/4)':>10}")
    for n in range(8, args.max_n + 1):
        c = build_construction(n)
        value = ns(c.tree)
        print(f"{n:>3} {c.m:>2} {value:>9} {construction_bound(n):>10} "
              f"{exact.lower_bound_float(n):>12.3f} {value / exact.upper_bound_float(n):>10.4f}")


if __name__ == "__main__":
    main()
