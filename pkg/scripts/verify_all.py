#!/usr/bin/env python3
"""Run every finite proof check at its default range and print the reports."""

from __future__ import annotations

import sys

from subtree_iso.paperlab import run_check

if __name__ == "__main__":
    verbose = "-v" in sys.argv
    reports = run_check("all")
    for rep in reports:
        print(rep.to_text(verbose=verbose), end="")
        print(f"  ({rep.elapsed:.2f}s)")
    sys.exit(0 if all(r.passed for r in reports) else 1)
