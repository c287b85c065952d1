"""Command-line entry point: ``subtree-iso {count,search,table,construct,verify,export}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from . import extremal, paperlab
from .counting import DEFAULT_SET_CAP, ResourceLimitError, count_subtrees_total, nr, ns
from .trees import TreeParseError, parse_tree, serialize_tree

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class CliConfig:
    command: str
    parallel: int
    set_cap: int
    out: Optional[str]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_count(args, cfg: CliConfig) -> int:
    tree = parse_tree(_read_input(args.input), args.format)
    rooted = args.rooted or args.root is not None
    lines = []
    if rooted:
        root = args.root if args.root is not None else (tree.root or 0)
        lines.append(f"nr={nr(tree, root, set_cap=cfg.set_cap)}")
    else:
        lines.append(f"ns={ns(tree, set_cap=cfg.set_cap)}")
    if args.total:
        lines.append(f"total={count_subtrees_total(tree)}")
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def cmd_search(args, cfg: CliConfig) -> int:
    fn = extremal.compute_S if args.kind == "S" else extremal.compute_R
    recs = [fn(n, cfg.parallel, set_cap=cfg.set_cap) for n in _orders(args)]
    if args.csv:
        _emit(extremal.records_csv(recs), cfg.out)
        return EXIT_OK
    lines = []
    for rec in recs:
        lines.append(f"{rec.kind}_{rec.n}={rec.value} witnesses={len(rec.witnesses)}")
        for tree in rec.witnesses:
            lines.append("  " + serialize_tree(tree, "levelseq"))
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def _orders(args) -> List[int]:
    if args.n is not None:
        return [args.n]
    return list(range(1, args.max_n + 1))


def cmd_table(args, cfg: CliConfig) -> int:
    rows = extremal.table(args.max_n, cfg.parallel, set_cap=cfg.set_cap)
    _emit(extremal.table_csv(rows) if args.csv else extremal.table_text(rows), cfg.out)
    return EXIT_OK if all(r.chain_ok for r in rows) else EXIT_FAIL


def cmd_construct(args, cfg: CliConfig) -> int:
    c = paperlab.build_construction(args.n)
    _emit(serialize_tree(c.tree, args.emit, name=f"C{args.n}"), cfg.out)
    return EXIT_OK


def cmd_verify(args, cfg: CliConfig) -> int:
    reports = paperlab.run_check(args.check, args.max_n)
    if args.csv:
        text = "".join(r.to_csv() if i == 0 else r.to_csv().split("\n", 1)[1]
                       for i, r in enumerate(reports))
    else:
        text = "".join(r.to_text(verbose=args.verbose) for r in reports)
    _emit(text, cfg.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_export(args, cfg: CliConfig) -> int:
    chunks = []
    if args.what == "exceptional":
        cat = paperlab.find_exceptional()
        for j in range(1, len(cat) + 1):
            chunks.append((f"E{j}", cat[j]))
    elif args.what == "construction":
        if args.n is None:
            raise ValueError("export construction needs --n")
        chunks.append((f"C{args.n}", paperlab.build_construction(args.n).tree))
    else:
        if args.n is None:
            raise ValueError(f"export {args.what} needs --n")
        fn = extremal.compute_S if args.what == "witnesses-S" else extremal.compute_R
        rec = fn(args.n, cfg.parallel, set_cap=cfg.set_cap)
        for i, tree in enumerate(rec.witnesses, 1):
            chunks.append((f"{rec.kind}{args.n}_w{i}", tree))
    parts = []
    for name, tree in chunks:
        body = serialize_tree(tree, args.format, name=name)
        if args.format == "dot":
            parts.append(body)
        else:
            parts.append(f"# {name}\n{body.rstrip()}\n")
    _emit("".join(parts), cfg.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    env_cap = os.environ.get("SUBTREE_ISO_MAXN")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--parallel", type=int, default=os.cpu_count() or 1,
                        help="worker processes for search commands (default: cores)")
    common.add_argument("--set-cap", type=int, default=DEFAULT_SET_CAP,
                        help=f"max intermediate class-set size (default {DEFAULT_SET_CAP})")

    p = argparse.ArgumentParser(
        prog="subtree-iso",
        description="Nonisomorphic subtree counts, extremal search and proof checks.",
        epilog=f"SUBTREE_ISO_MAXN overrides the generator range cap (now: {env_cap or 'unset'}).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="ns or nr of one tree")
    c.add_argument("input", help="tree file, or - for stdin")
    c.add_argument("--format", choices=["edgelist", "levelseq"], default="edgelist")
    c.add_argument("--rooted", action="store_true", help="count root-containing classes (nr)")
    c.add_argument("--root", type=int, help="root vertex (implies --rooted)")
    c.add_argument("--total", action="store_true", help="also print the labeled subtree count")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("search", parents=[common], help="S_n or R_n with all witnesses")
    s.add_argument("--kind", choices=["S", "R"], default="S")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--max-n", type=int)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", parents=[common], help="S_n, R_n and the bound chain")
    t.add_argument("--max-n", type=int, default=10)
    t.add_argument("--csv", action="store_true")
    t.set_defaults(func=cmd_table)

    k = sub.add_parser("construct", parents=[common], help="emit the lower-bound tree C_n")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--emit", choices=["edgelist", "dot"], default="edgelist")
    k.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="run finite proof checks")
    v.add_argument("check", choices=sorted(paperlab.CHECKS) + ["all"])
    v.add_argument("--max-n", type=int, help="range override for lemma/aux/centroid/construction")
    v.add_argument("--csv", action="store_true")
    v.add_argument("--verbose", "-v", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", parents=[common], help="write trees for figures")
    e.add_argument("what", choices=["exceptional", "construction", "witnesses-S", "witnesses-R"])
    e.add_argument("--n", type=int)
    e.add_argument("--format", choices=["edgelist", "levelseq", "dot"], default="dot")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CliConfig(args.command, max(1, args.parallel), args.set_cap, args.out)
    try:
        return args.func(args, cfg)
    except (TreeParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
