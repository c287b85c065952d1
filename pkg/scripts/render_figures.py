#!/usr/bin/env python3
"""Write DOT files for the exceptional trees and a few construction trees.

Usage:
    python scripts/render_figures.py OUTDIR [--n 12 16]
Render with e.g. ``dot -Tpng OUTDIR/E5.dot -o E5.png``.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from subtree_iso.paperlab import build_construction, find_exceptional
from subtree_iso.trees import serialize_tree


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--n", type=int, nargs="*", default=[12, 16])
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    cat = find_exceptional()
    for j in range(1, len(cat) + 1):
        (args.outdir / f"E{j}.dot").write_text(serialize_tree(cat[j], "dot", name=f"E{j}"))
    for n in args.n:
        c = build_construction(n)
        (args.outdir / f"C{n}.dot").write_text(serialize_tree(c.tree, "dot", name=f"C{n}"))
    print(f"wrote {len(cat) + len(args.n)} DOT files to {args.outdir}")


if __name__ == "__main__":
    main()
