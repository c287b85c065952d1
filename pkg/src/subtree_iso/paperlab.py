"""Lower-bound construction, exceptional rooted trees, and finite proof checks.

Each ``verify_*`` function discharges one finite obligation by exhaustive
computation and returns a :class:`VerificationReport`. Every comparison with
an irrational threshold goes through :mod:`subtree_iso.exact`.
"""

from __future__ import annotations

import csv
import io
import itertools
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import exact
from .counting import _down_sets, count_subtrees_avoiding, DEFAULT_SET_CAP, nr, ns
from .trees import (
    LabeledTree,
    branch_sizes,
    canonical_levels,
    centroids,
    join_at_root,
    merge_at_root,
    rooted_code,
    serialize_tree,
)
from .treegen import gen_free_trees, gen_rooted_trees


@dataclass
class VerificationReport:
    name: str
    scope: str
    checked: int = 0
    counterexamples: List[str] = field(default_factory=list)
    rows: List[Dict[str, object]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def violations(self) -> int:
        return len(self.counterexamples)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, levels_or_note: str) -> None:
        self.counterexamples.append(levels_or_note)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{self.name} [{self.scope}]: {self.checked}/{self.checked} checked, "
                f"{self.violations} violations -> {verdict}")

    def to_text(self, verbose: bool = False) -> str:
        lines = [self.summary()]
        if verbose:
            for row in self.rows:
                lines.append("  " + ", ".join(f"{k}={v}" for k, v in row.items()))
        for ce in self.counterexamples:
            lines.append(f"  counterexample: {ce}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "range", "verdict", "checked", "counterexample"])
        verdict = "pass" if self.passed else "fail"
        if not self.counterexamples:
            w.writerow([self.name, self.scope, verdict, self.checked, ""])
        for ce in self.counterexamples:
            w.writerow([self.name, self.scope, verdict, self.checked, ce])
        return buf.getvalue()


def _levels_str(tree: LabeledTree) -> str:
    return " ".join(map(str, canonical_levels(tree)))


# ---------------------------------------------------------------------------
# construction C_n
# ---------------------------------------------------------------------------

@dataclass
class Construction:
    n: int
    m: int
    tree: LabeledTree
    names: Dict[str, int]

    def vertex(self, name: str) -> int:
        return self.names[name]


def build_construction(n: int) -> Construction:
    """The n-vertex tree built from a path of ``m = n//4 - 2`` pendant-gadget vertices.

    Backbone ``x1 x2 x3 v1 .. vm y1 y2 y3``; ``z`` hangs off ``x2``; each
    ``v_i`` carries a leaf ``l_i`` and a 2-path ``a_i b_i``; the remaining one
    to four vertices are leaves on ``x3`` and ``y1`` depending on ``n mod 4``.
    """
    if n < 8:
        raise ValueError(f"construction needs n >= 8, got {n}")
    m = n // 4 - 2
    names: Dict[str, int] = {}
    edges: List[Tuple[int, int]] = []

    def add(name: str, parent: Optional[str] = None) -> None:
        names[name] = len(names)
        if parent is not None:
            edges.append((names[parent], names[name]))

    add("x1")
    add("x2", "x1")
    add("x3", "x2")
    prev = "x3"
    for i in range(1, m + 1):
        add(f"v{i}", prev)
        prev = f"v{i}"
    add("y1", prev)
    add("y2", "y1")
    add("y3", "y2")
    add("z", "x2")
    for i in range(1, m + 1):
        add(f"l{i}", f"v{i}")
        add(f"a{i}", f"v{i}")
        add(f"b{i}", f"a{i}")
    extra_x3, extra_y1 = {0: (1, 0), 1: (1, 1), 2: (2, 1), 3: (2, 2)}[n % 4]
    for k in range(1, extra_x3 + 1):
        add(f"px{k}", "x3")
    for k in range(1, extra_y1 + 1):
        add(f"py{k}", "y1")
    assert len(names) == n, (n, len(names))
    return Construction(n, m, LabeledTree.from_edges(n, edges), names)


def construction_bound(n: int) -> int:
    """Guaranteed count of backbone-containing subtree classes of C_n."""
    if n < 8:
        raise ValueError(f"construction needs n >= 8, got {n}")
    m = n // 4 - 2
    bound = (2, 4, 6, 9)[n % 4] * 5 ** m
    assert exact.ge_lower_bound(bound, n)
    return bound


def _distances(tree: LabeledTree, src: int) -> List[int]:
    dist = [-1] * tree.order
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in tree.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def diameter_pairs(tree: LabeledTree) -> Tuple[int, set]:
    best, pairs = -1, set()
    for u in range(tree.order):
        du = _distances(tree, u)
        for v in range(u + 1, tree.order):
            if du[v] > best:
                best, pairs = du[v], {(u, v)}
            elif du[v] == best:
                pairs.add((u, v))
    return best, pairs


def construction_diameter_ok(c: Construction) -> bool:
    _, pairs = diameter_pairs(c.tree)
    want = {tuple(sorted((c.vertex("x1"), c.vertex("y3")))),
            tuple(sorted((c.vertex("z"), c.vertex("y3"))))}
    return pairs == want


def verify_construction(n_max: int = 24, n_min: int = 8) -> VerificationReport:
    rep = VerificationReport("construction", f"{n_min}<=n<={n_max}")
    t0 = time.perf_counter()
    for n in range(n_min, n_max + 1):
        c = build_construction(n)
        bound = construction_bound(n)
        value = ns(c.tree)
        ok_order = c.tree.order == n
        ok_diam = construction_diameter_ok(c)
        ok_bound = value >= bound and exact.ge_lower_bound(bound, n)
        rep.checked += 1
        rep.rows.append({"n": n, "m": c.m, "ns": value, "bound": bound,
                         "order_ok": ok_order, "diameter_ok": ok_diam})
        if not (ok_order and ok_diam and ok_bound):
            rep.fail(f"n={n} ns={value} bound={bound} order_ok={ok_order} diameter_ok={ok_diam}")
    rep.elapsed = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# exceptional trees
# ---------------------------------------------------------------------------

@dataclass
class ExceptionalCatalog:
    entries: List[Tuple[LabeledTree, int]]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, j: int) -> LabeledTree:
        """``catalog[j]`` is E_j, 1-based."""
        return self.entries[j - 1][0]

    def nr_of(self, j: int) -> int:
        return self.entries[j - 1][1]

    @property
    def codes(self) -> Dict[str, int]:
        return {rooted_code(t): j for j, (t, _) in enumerate(self.entries, 1)}

    def index_of(self, tree: LabeledTree) -> Optional[int]:
        return self.codes.get(rooted_code(tree))


def violates_aux(value: int, n: int) -> bool:
    return not exact.le_pow5_quarter_minus1(value, n)


def find_exceptional(max_n: int = 7) -> ExceptionalCatalog:
    """All rooted trees of order <= max_n with nr > 5^(n/4) - 1.

    Ordered by (order, nr, level sequence descending); ties in order and nr
    have no intrinsic numbering.
    """
    found = []
    for n in range(1, max_n + 1):
        for tree in gen_rooted_trees(n):
            value = nr(tree)
            if violates_aux(value, n):
                found.append((n, value, canonical_levels(tree), tree))
    found.sort(key=lambda e: (e[0], e[1], [-x for x in e[2]]))
    return ExceptionalCatalog([(t, v) for _, v, _, t in found])


# ---------------------------------------------------------------------------
# Case 2 of the induction step
# ---------------------------------------------------------------------------

def _small_enough(value: int, order: int) -> bool:
    """``nr(R_1) <= 5^((|R_1| - 1)/4)``, the condition that lets Case 1 apply."""
    return exact.le_pow5_quarter(value, order - 1)


def verify_case2_subcases(catalog: Optional[ExceptionalCatalog] = None) -> VerificationReport:
    cat = catalog or find_exceptional()
    rep = VerificationReport("case2", "bullets a-d")
    t0 = time.perf_counter()

    def record(label: str, tree: LabeledTree, expect: Optional[int] = None):
        value = nr(tree)
        ok = _small_enough(value, tree.order) and (expect is None or value == expect)
        rep.checked += 1
        rep.rows.append({"case": label, "order": tree.order, "nr": value, "expected": expect,
                         "ok": ok})
        if not ok:
            rep.fail(f"{label}: order={tree.order} nr={value} expected={expect} "
                     f"levels={_levels_str(tree)}")

    record("four E1", join_at_root([cat[1]] * 4), 5)
    record("three E2", join_at_root([cat[2]] * 3), 10)
    for j in range(3, 11):
        k = cat.nr_of(j)
        record(f"E{j}+E{j}", join_at_root([cat[j], cat[j]]), (k + 1) * (k + 2) // 2)
    for i, j in itertools.combinations(range(6, 11), 2):
        record(f"E{i}+E{j}", join_at_root([cat[i], cat[j]]))
    rep.elapsed = time.perf_counter() - t0
    return rep


def case576_multisets() -> List[Tuple[int, ...]]:
    """Branch multisets left after Case 2, as sorted tuples of catalog indices."""
    out = []
    for c1, c2, c3, c4, c5 in itertools.product(range(4), range(3), range(2), range(2), range(2)):
        base = (1,) * c1 + (2,) * c2 + (3,) * c3 + (4,) * c4 + (5,) * c5
        for big in (None, 6, 7, 8, 9, 10):
            out.append(base + (() if big is None else (big,)))
    return out


def verify_576_cases(catalog: Optional[ExceptionalCatalog] = None) -> VerificationReport:
    cat = catalog or find_exceptional()
    rep = VerificationReport("cases576", "all-exceptional branch multisets")
    t0 = time.perf_counter()
    cases = case576_multisets()
    if len(cases) != 576:
        rep.fail(f"enumeration produced {len(cases)} multisets, expected 576")
    codes = cat.codes
    passing = exceptional = 0
    for multiset in cases:
        tree = join_at_root([cat[j] for j in multiset])
        value = nr(tree)
        rep.checked += 1
        if not violates_aux(value, tree.order):
            passing += 1
        elif rooted_code(tree) in codes:
            exceptional += 1
            rep.rows.append({"multiset": multiset, "order": tree.order, "nr": value,
                             "class": f"E{codes[rooted_code(tree)]}"})
        else:
            rep.fail(f"branches={multiset} order={tree.order} nr={value} "
                     f"levels={_levels_str(tree)}")
    rep.rows.insert(0, {"cases": len(cases), "pass": passing, "exceptional": exceptional})
    rep.elapsed = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# exhaustive inequality checks
# ---------------------------------------------------------------------------

def verify_aux_inequality(n_max: int = 12,
                          catalog: Optional[ExceptionalCatalog] = None) -> VerificationReport:
    cat = catalog or find_exceptional()
    codes = cat.codes
    rep = VerificationReport("aux", f"rooted trees of order <= {n_max}")
    t0 = time.perf_counter()
    seen_exceptional = set()
    for n in range(1, n_max + 1):
        violators = 0
        for tree in gen_rooted_trees(n):
            value = nr(tree)
            rep.checked += 1
            if not violates_aux(value, n):
                continue
            violators += 1
            code = rooted_code(tree)
            if code in codes:
                seen_exceptional.add(code)
                if not exact.le_pow5_quarter(value, n):
                    rep.fail(f"catalog tree exceeds 5^(n/4): nr={value} levels={_levels_str(tree)}")
            else:
                rep.fail(f"n={n} nr={value} levels={_levels_str(tree)}")
        rep.rows.append({"n": n, "violators": violators})
    if n_max >= 7 and len(seen_exceptional) != len(codes):
        rep.fail(f"only {len(seen_exceptional)} of {len(codes)} catalog trees violated")
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_lemma(n_max: int = 11) -> VerificationReport:
    """Both lemma inequalities, exhaustively up to merged order ``n_max``."""
    rep = VerificationReport("lemma", f"rooted trees and merged pairs of order <= {n_max}")
    t0 = time.perf_counter()
    by_order: Dict[int, List[Tuple[LabeledTree, int]]] = {}
    for k in range(1, n_max + 1):
        by_order[k] = [(t, nr(t)) for t in gen_rooted_trees(k)]

    # product over branches: nr(T) <= prod (nr(T_j) + 1)
    for k in range(1, n_max + 1):
        for tree, value in by_order[k]:
            down = _down_sets(tree, 0, DEFAULT_SET_CAP)
            bound = 1
            for c in tree.adj[0]:
                bound *= len(down[c]) + 1
            rep.checked += 1
            if value > bound:
                rep.fail(f"eq2 nr={value} > {bound} levels={_levels_str(tree)}")

    # shared root: nr(R1 u R2) <= nr(R1) nr(R2) - 1
    pairs = 0
    for a in range(2, n_max + 1):
        for b in range(a, n_max + 2 - a):
            for i, (r1, v1) in enumerate(by_order[a]):
                start = i if a == b else 0
                for r2, v2 in by_order[b][start:]:
                    merged = merge_at_root(r1, r2)
                    value = nr(merged)
                    pairs += 1
                    rep.checked += 1
                    if value > v1 * v2 - 1:
                        rep.fail(f"eq1 nr={value} > {v1}*{v2}-1 R1={_levels_str(r1)} "
                                 f"R2={_levels_str(r2)}")
    rep.rows.append({"pairs": pairs, "trees": sum(len(v) for v in by_order.values())})
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_centroid_bound(n_max: int = 12) -> VerificationReport:
    rep = VerificationReport("centroid", f"free trees of order <= {n_max}")
    t0 = time.perf_counter()
    for n in range(1, n_max + 1):
        worst = 0
        for tree in gen_free_trees(n):
            for v in centroids(tree):
                avoiding = count_subtrees_avoiding(tree, v)
                power_sum = sum(2 ** s for s in branch_sizes(tree, v))
                worst = max(worst, avoiding)
                rep.checked += 1
                if not (avoiding <= power_sum and exact.le_centroid_bound(power_sum, n)):
                    rep.fail(f"n={n} avoiding={avoiding} sum={power_sum} "
                             f"tree={serialize_tree(tree).strip()!r}")
        rep.rows.append({"n": n, "max_avoiding": worst,
                         "bound": f"{exact.centroid_bound_float(n):.3f}"})
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_exceptional() -> VerificationReport:
    """The catalog has ten trees with the published orders and nr labels."""
    rep = VerificationReport("exceptional", "rooted trees of order <= 7")
    t0 = time.perf_counter()
    cat = find_exceptional()
    orders = sorted(t.order for t, _ in cat.entries)
    values = sorted(v for _, v in cat.entries)
    rep.checked = len(cat)
    for j, (t, v) in enumerate(cat.entries, 1):
        rep.rows.append({"E": j, "order": t.order, "nr": v, "levels": _levels_str(t)})
    if len(cat) != 10:
        rep.fail(f"found {len(cat)} exceptional trees")
    if orders != [1, 2, 3, 3, 4, 5, 5, 5, 6, 7]:
        rep.fail(f"orders {orders}")
    if values != [1, 2, 3, 3, 5, 7, 7, 7, 11, 16]:
        rep.fail(f"nr values {values}")
    rep.elapsed = time.perf_counter() - t0
    return rep


CHECKS = {
    "lemma": lambda n: verify_lemma(n if n is not None else 11),
    "aux": lambda n: verify_aux_inequality(n if n is not None else 12),
    "cases576": lambda n: verify_576_cases(),
    "case2": lambda n: verify_case2_subcases(),
    "centroid": lambda n: verify_centroid_bound(n if n is not None else 12),
    "construction": lambda n: verify_construction(n if n is not None else 24),
    "exceptional": lambda n: verify_exceptional(),
}


def run_check(name: str, n_max: Optional[int] = None) -> List[VerificationReport]:
    if name == "all":
        return [fn(n_max) for fn in CHECKS.values()]
    if name not in CHECKS:
        raise KeyError(name)
    return [CHECKS[name](n_max)]
