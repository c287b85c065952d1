"""Independent oracles shared across the suite.

None of these touch AHU codes or the set DP: connectivity is checked by a
plain subset scan and isomorphism by permutation or backtracking search.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

import pytest
from hypothesis import strategies as st

from subtree_iso.treegen import prufer_decode
from subtree_iso.trees import LabeledTree


def is_connected_subset(tree: LabeledTree, subset) -> bool:
    subset = set(subset)
    if not subset:
        return False
    start = next(iter(subset))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in tree.adj[u]:
            if v in subset and v not in seen:
                seen.add(v)
                queue.append(v)
    return seen == subset


def connected_subsets_scan(tree: LabeledTree):
    """All nonempty connected vertex subsets by scanning every bitmask."""
    n = tree.order
    out = set()
    for mask in range(1, 1 << n):
        s = frozenset(i for i in range(n) if mask >> i & 1)
        if is_connected_subset(tree, s):
            out.add(s)
    return out


def edge_set(tree: LabeledTree):
    return {frozenset(e) for e in tree.edges()}


def isomorphic_by_permutation(a: LabeledTree, ra, b: LabeledTree, rb) -> bool:
    """Try every bijection; ``ra``/``rb`` may be None for free isomorphism."""
    if a.order != b.order:
        return False
    ea, eb = edge_set(a), edge_set(b)
    for perm in itertools.permutations(range(b.order)):
        if ra is not None and perm[ra] != rb:
            continue
        if all(frozenset((perm[u], perm[v])) in eb for u, v in map(tuple, ea)):
            return True
    return False


def isomorphic_by_backtracking(a: LabeledTree, ra: int, b: LabeledTree, rb: int) -> bool:
    """Root-preserving isomorphism search mapping a's BFS order into b."""
    if a.order != b.order:
        return False

    def bfs(t, r):
        depth = {r: 0}
        parent = {r: None}
        order = [r]
        for u in order:
            for v in t.adj[u]:
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    order.append(v)
        return order, depth, parent

    order_a, depth_a, par_a = bfs(a, ra)
    _, depth_b, par_b = bfs(b, rb)
    mapping = {}
    used = set()

    def extend(i):
        if i == len(order_a):
            return True
        u = order_a[i]
        if u == ra:
            cands = [rb]
        else:
            cands = [w for w in b.adj[mapping[par_a[u]]] if par_b[w] == mapping[par_a[u]]]
        for w in cands:
            if w in used or depth_b[w] != depth_a[u] or len(b.adj[w]) != len(a.adj[u]):
                continue
            mapping[u] = w
            used.add(w)
            if extend(i + 1):
                return True
            used.discard(w)
            del mapping[u]
        return False

    return extend(0)


def random_tree(n: int, rng: random.Random, rooted: bool = False) -> LabeledTree:
    if n == 1:
        return LabeledTree(((),), 0 if rooted else None)
    if n == 2:
        t = LabeledTree.from_edges(2, [(0, 1)])
    else:
        t = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
    return t.with_root(rng.randrange(n)) if rooted else t


def random_relabel(tree: LabeledTree, rng: random.Random) -> LabeledTree:
    from subtree_iso.trees import relabel
    perm = list(range(tree.order))
    rng.shuffle(perm)
    return relabel(tree, perm)


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12, rooted: bool = False):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        t = LabeledTree(((),)) if n == 1 else LabeledTree.from_edges(2, [(0, 1)])
    else:
        seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
        t = prufer_decode(seq, n)
    if rooted:
        t = t.with_root(draw(st.integers(0, n - 1)))
    return t


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda k: int(k.split()[0])):
            terminalreporter.write_line(RESULTS[key])
