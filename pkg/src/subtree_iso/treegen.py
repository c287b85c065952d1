"""Exhaustive generation of rooted and free trees by level sequences.

Rooted trees come from the canonical level-sequence successor rule, starting
at the path ``1 2 ... n`` and ending at the star ``1 2 2 ... 2``. Free trees
are the rooted ones whose root is a centroid, with one of the two rootings
dropped when the tree is bicentroidal.
"""

from __future__ import annotations

import heapq
import itertools
import os
from typing import Iterator, List

from .trees import LabeledTree, _codes_from, tree_from_levels

DEFAULT_MAX_ORDER = 18


def max_order() -> int:
    """Generator range cap; ``SUBTREE_ISO_MAXN`` overrides the default."""
    env = os.environ.get("SUBTREE_ISO_MAXN")
    return int(env) if env else DEFAULT_MAX_ORDER


def _check_range(n: int, cap: int | None) -> None:
    limit = max_order() if cap is None else cap
    if not 1 <= n <= limit:
        raise ValueError(f"order {n} outside supported range 1..{limit}")


def rooted_level_sequences(n: int, cap: int | None = None) -> Iterator[List[int]]:
    """Canonical level sequences of all rooted trees of order ``n``, each once."""
    _check_range(n, cap)
    seq = list(range(1, n + 1))
    while True:
        yield list(seq)
        p = n - 1
        while p > 0 and seq[p] == 2:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        gap = p - q
        for i in range(p, n):
            seq[i] = seq[i - gap]


def gen_rooted_trees(n: int, cap: int | None = None) -> Iterator[LabeledTree]:
    for levels in rooted_level_sequences(n, cap):
        yield tree_from_levels(levels)


def _subtree_sizes(levels: List[int]) -> List[int]:
    n = len(levels)
    size = [1] * n
    stack: List[int] = []
    for i in range(n):
        while stack and levels[stack[-1]] >= levels[i]:
            j = stack.pop()
            if stack:
                size[stack[-1]] += size[j]
        stack.append(i)
    while len(stack) > 1:
        j = stack.pop()
        size[stack[-1]] += size[j]
    return size


def is_centroid_canonical(levels: List[int]) -> bool:
    """True iff the root is a centroid, and for two centroids the root's half has the smaller code."""
    n = len(levels)
    size = _subtree_sizes(levels)
    branch_roots = [i for i in range(1, n) if levels[i] == 2]
    half = None
    for b in branch_roots:
        if 2 * size[b] > n:
            return False
        if 2 * size[b] == n:
            half = b
    if half is None:
        return True
    tree = tree_from_levels(levels)
    mine = _codes_from(tree, 0, banned=half)[0][0]
    other = _codes_from(tree, half, banned=0)[0][half]
    return mine <= other


def free_level_sequences(n: int, cap: int | None = None) -> Iterator[List[int]]:
    for levels in rooted_level_sequences(n, cap):
        if is_centroid_canonical(levels):
            yield levels


def gen_free_trees(n: int, cap: int | None = None) -> Iterator[LabeledTree]:
    """One representative per free tree, rooted at a centroid."""
    for levels in free_level_sequences(n, cap):
        yield tree_from_levels(levels)


def prufer_decode(seq: List[int], n: int) -> LabeledTree:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return LabeledTree.from_edges(n, edges)


def gen_labeled_trees(n: int) -> Iterator[LabeledTree]:
    """All ``n^(n-2)`` labeled trees via Prüfer codes; a test oracle for small ``n``."""
    if n == 1:
        yield LabeledTree(((),))
        return
    if n == 2:
        yield LabeledTree.from_edges(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(list(seq), n)
