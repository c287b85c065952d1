"""Exhaustive computation of S_n = max ns(T) and R_n = max nr(T) with all witnesses."""

from __future__ import annotations

import csv
import io
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from . import exact
from .counting import DEFAULT_SET_CAP, nr, ns
from .trees import LabeledTree, canonical_levels, free_code, rooted_code, tree_from_levels
from .treegen import free_level_sequences, max_order, rooted_level_sequences

DEFAULT_MAX_S = 14
DEFAULT_MAX_R = 16
CHUNK = 512

# (value, [(code, level sequence), ...]) for one shard
Partial = Tuple[int, List[Tuple[str, Tuple[int, ...]]]]


@dataclass
class ExtremalRecord:
    n: int
    kind: str  # "S" or "R"
    value: int
    witnesses: List[LabeledTree] = field(default_factory=list)
    witness_codes: List[str] = field(default_factory=list)

    def first_witness_levelseq(self) -> str:
        return " ".join(map(str, canonical_levels(self.witnesses[0])))


def _score_shard(kind: str, shard: Sequence[Sequence[int]], set_cap: int) -> Partial:
    best = -1
    hits: List[Tuple[str, Tuple[int, ...]]] = []
    for levels in shard:
        tree = tree_from_levels(levels)
        value = ns(tree, set_cap) if kind == "S" else nr(tree, set_cap=set_cap)
        if value < best:
            continue
        code = free_code(tree) if kind == "S" else rooted_code(tree)
        if value > best:
            best, hits = value, []
        hits.append((code, tuple(levels)))
    return best, hits


def merge_partials(parts: Iterable[Partial]) -> Partial:
    """Max-with-all-witnesses reduction; associative, commutative, order-free output."""
    best = -1
    hits: dict = {}
    for value, ws in parts:
        if value > best:
            best, hits = value, {}
        if value == best:
            for code, levels in ws:
                hits.setdefault(code, levels)
    return best, sorted(hits.items())


def _shards(seqs: Iterable[List[int]]) -> Iterable[List[List[int]]]:
    it = iter(seqs)
    while True:
        chunk = list(itertools.islice(it, CHUNK))
        if not chunk:
            return
        yield chunk


def _compute(kind: str, n: int, limit: int, parallel: int, set_cap: int) -> ExtremalRecord:
    if not 1 <= n <= limit:
        raise ValueError(f"{kind}_n search supports 1 <= n <= {limit}, got {n}")
    gen = free_level_sequences if kind == "S" else rooted_level_sequences
    shards = _shards(gen(n, max(limit, max_order())))
    if parallel <= 1:
        parts = [_score_shard(kind, s, set_cap) for s in shards]
    else:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            futures = [pool.submit(_score_shard, kind, s, set_cap) for s in shards]
            parts = [f.result() for f in futures]
    value, hits = merge_partials(parts)
    return ExtremalRecord(
        n=n, kind=kind, value=value,
        witnesses=[tree_from_levels(levels) for _, levels in hits],
        witness_codes=[code for code, _ in hits],
    )


def _limit(limit: Optional[int], default: int) -> int:
    if limit is not None:
        return limit
    return max_order() if os.environ.get("SUBTREE_ISO_MAXN") else default


def compute_S(n: int, parallel: int = 1, limit: Optional[int] = None,
              set_cap: int = DEFAULT_SET_CAP) -> ExtremalRecord:
    return _compute("S", n, _limit(limit, DEFAULT_MAX_S), parallel, set_cap)


def compute_R(n: int, parallel: int = 1, limit: Optional[int] = None,
              set_cap: int = DEFAULT_SET_CAP) -> ExtremalRecord:
    return _compute("R", n, _limit(limit, DEFAULT_MAX_R), parallel, set_cap)


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

@dataclass
class TableRow:
    n: int
    S: ExtremalRecord
    R: ExtremalRecord
    lower_ok: bool
    centroid_ok: bool
    upper_ok: bool

    @property
    def ratio(self) -> float:
        return self.S.value / exact.upper_bound_float(self.n)

    @property
    def chain_ok(self) -> bool:
        return self.lower_ok and self.centroid_ok and self.upper_ok


def table(max_n: int, parallel: int = 1, limit: Optional[int] = None,
          set_cap: int = DEFAULT_SET_CAP) -> List[TableRow]:
    """Extremal values for ``1..max_n`` with the bound chain checked exactly per row."""
    rows = []
    for n in range(1, max_n + 1):
        s = compute_S(n, parallel, limit, set_cap)
        r = compute_R(n, parallel, limit, set_cap)
        rows.append(TableRow(
            n, s, r,
            lower_ok=exact.ge_lower_bound(s.value, n),
            centroid_ok=exact.le_r_plus_centroid(s.value, r.value, n),
            upper_ok=exact.le_pow5_quarter(r.value, n),
        ))
    return rows


TABLE_COLUMNS = ["n", "S_n", "R_n", "lower_2*5^(n/4-2)", "R_n+3*2^(n/2-1)", "5^(n/4)",
                 "S_n/5^(n/4)", "n_mod_4", "S_witness_count", "R_witness_count",
                 "S_first_witness_levelseq", "R_first_witness_levelseq", "chain_ok"]


def table_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for row in rows:
        n = row.n
        w.writerow([
            n, row.S.value, row.R.value,
            f"{exact.lower_bound_float(n):.6g}",
            f"{row.R.value + exact.centroid_bound_float(n):.6g}",
            f"{exact.upper_bound_float(n):.6g}",
            f"{row.ratio:.6f}", n % 4,
            len(row.S.witnesses), len(row.R.witnesses),
            row.S.first_witness_levelseq(), row.R.first_witness_levelseq(),
            int(row.chain_ok),
        ])
    return buf.getvalue()


def records_csv(records: Sequence[ExtremalRecord]) -> str:
    """One line per record: ``n, S_n|R_n, witness_count, first_witness_levelseq``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    kind = records[0].kind if records else "S"
    w.writerow(["n", f"{kind}_n", "witness_count", "first_witness_levelseq"])
    for rec in records:
        w.writerow([rec.n, rec.value, len(rec.witnesses), rec.first_witness_levelseq()])
    return buf.getvalue()


def table_text(rows: Sequence[TableRow]) -> str:
    head = (f"{'n':>3} {'S_n':>6} {'R_n':>6} {'2*5^(n/4-2)':>12} {'R+3*2^(n/2-1)':>14} "
            f"{'5^(n/4)':>10} {'S/5^(n/4)':>10} {'chain':>6}")
    lines = [head, "-" * len(head)]
    for row in rows:
        n = row.n
        lines.append(
            f"{n:>3} {row.S.value:>6} {row.R.value:>6} {exact.lower_bound_float(n):>12.4f} "
            f"{row.R.value + exact.centroid_bound_float(n):>14.2f} "
            f"{exact.upper_bound_float(n):>10.2f} {row.ratio:>10.5f} "
            f"{'ok' if row.chain_ok else 'FAIL':>6}")
    lines.append("")
    lines.append("S_n / 5^(n/4) by residue of n mod 4:")
    for res in range(4):
        vals = [f"n={r.n}:{r.ratio:.5f}" for r in rows if r.n % 4 == res]
        lines.append(f"  {res}: " + (", ".join(vals) if vals else "-"))
    return "\n".join(lines) + "\n"
