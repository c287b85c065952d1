"""Subtree counts: ns, nr, total connected subsets, centroid-avoiding subsets.

Two independent routes are kept side by side. The fast route is a bottom-up
set DP over rooted codes; the oracle route enumerates every connected vertex
subset and canonicalizes each one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, FrozenSet, Iterator, List, Optional, Set

from .trees import (
    LabeledTree,
    all_down_codes,
    children_lists,
    free_code,
    free_code_of_rooted,
    induced_subtree,
    rooted_code,
)

DEFAULT_SET_CAP = 10 ** 7
MAX_TOTAL_ORDER = 60  # 2^(n-1) + n - 1 stays below 2^63
MAX_BRUTEFORCE_ORDER = 25


class ResourceLimitError(RuntimeError):
    """A configured cap on work or memory was exceeded."""


@dataclass(frozen=True)
class SubtreeClassSet:
    codes: FrozenSet[str]
    mode: str  # "rooted" or "free"

    def __len__(self) -> int:
        return len(self.codes)


# ---------------------------------------------------------------------------
# enumeration (oracle route)
# ---------------------------------------------------------------------------

def enumerate_subtrees(tree: LabeledTree) -> Iterator[FrozenSet[int]]:
    """Yield every nonempty connected vertex subset exactly once.

    Each subset is produced from its minimum vertex ``a``; only vertices
    above ``a`` are ever added, so no global dedup set is needed.
    """
    adj = tree.adj

    def grow(chosen: List[int], frontier: List[tuple], a: int):
        if not frontier:
            yield frozenset(chosen)
            return
        (v, par), rest = frontier[0], frontier[1:]
        yield from grow(chosen, rest, a)
        ext = [(w, v) for w in adj[v] if w != par and w > a]
        chosen.append(v)
        yield from grow(chosen, rest + ext, a)
        chosen.pop()

    for a in range(tree.order):
        yield from grow([a], [(w, a) for w in adj[a] if w > a], a)


def ns_bruteforce(tree: LabeledTree) -> int:
    return len({free_code(induced_subtree(tree, s)) for s in enumerate_subtrees(tree)})


def nr_bruteforce(tree: LabeledTree, max_order: int = MAX_BRUTEFORCE_ORDER) -> int:
    r = tree.require_root()
    if tree.order > max_order:
        raise ResourceLimitError(f"brute force capped at order {max_order}, got {tree.order}")
    codes = set()
    for s in enumerate_subtrees(tree):
        if r in s:
            codes.add(rooted_code(induced_subtree(tree, s, root=r)))
    return len(codes)


# ---------------------------------------------------------------------------
# total counts
# ---------------------------------------------------------------------------

def _rooted_counts(tree: LabeledTree, root: int) -> List[int]:
    """Number of connected subsets having each vertex as their top vertex."""
    order, kids = children_lists(tree, root)
    f = [1] * tree.order
    for v in reversed(order):
        for c in kids[v]:
            f[v] *= f[c] + 1
    return f


def count_subtrees_total(tree: LabeledTree, max_order: int = MAX_TOTAL_ORDER) -> int:
    """Number of nonempty connected vertex subsets."""
    if tree.order > max_order:
        raise ResourceLimitError(f"total counts are 64-bit; order {tree.order} > {max_order}")
    total = sum(_rooted_counts(tree, 0))
    if total >= 1 << 63:
        raise OverflowError("subtree count exceeds 64 bits")
    return total


def count_subtrees_avoiding(tree: LabeledTree, v: int,
                            max_order: int = MAX_TOTAL_ORDER) -> int:
    """Connected subsets not containing ``v``: the sum of totals over components of tree - v."""
    if tree.order > max_order:
        raise ResourceLimitError(f"total counts are 64-bit; order {tree.order} > {max_order}")
    f = _rooted_counts(tree, v)
    return sum(f) - f[v]


# ---------------------------------------------------------------------------
# set DP (fast route)
# ---------------------------------------------------------------------------

def _down_sets(tree: LabeledTree, root: int, set_cap: int) -> List[Set[str]]:
    """For each vertex, the rooted codes of subtrees that have it as their top vertex.

    Children whose descendant subtrees share a rooted code share one DP set,
    and a group of ``k`` identical children contributes multisets of size
    at most ``k`` rather than a ``k``-fold product.
    """
    order, kids = children_lists(tree, root)
    codes = all_down_codes(tree, root)
    memo: Dict[str, Set[str]] = {}
    out: List[Optional[Set[str]]] = [None] * tree.order
    for v in reversed(order):
        key = codes[v]
        if key in memo:
            out[v] = memo[key]
            continue
        groups: Dict[str, int] = {}
        for c in kids[v]:
            groups[codes[c]] = groups.get(codes[c], 0) + 1
        # partial multisets stay sorted and deduplicated after every group
        partial: Set[tuple] = {()}
        for child_code, k in sorted(groups.items()):
            choices = sorted(memo[child_code])
            picks = [m for r in range(k + 1) for m in combinations_with_replacement(choices, r)]
            if len(partial) * len(picks) > set_cap:
                raise ResourceLimitError(
                    f"intermediate class set would exceed cap {set_cap}")
            if len(picks) == 1:
                continue
            partial = {tuple(sorted(p + m)) if p and m else p or m
                       for p in partial for m in picks}
        result = {"(" + "".join(p) + ")" for p in partial}
        memo[key] = result
        out[v] = result
    return out  # type: ignore[return-value]


def nr_set(tree: LabeledTree, root: Optional[int] = None,
           set_cap: int = DEFAULT_SET_CAP) -> SubtreeClassSet:
    r = tree.require_root() if root is None else root
    return SubtreeClassSet(frozenset(_down_sets(tree, r, set_cap)[r]), "rooted")


def nr(tree: LabeledTree, root: Optional[int] = None, set_cap: int = DEFAULT_SET_CAP) -> int:
    """Number of root-containing subtrees up to root-preserving isomorphism."""
    return len(nr_set(tree, root, set_cap))


def ns_set(tree: LabeledTree, set_cap: int = DEFAULT_SET_CAP) -> SubtreeClassSet:
    """Free isomorphism classes of all subtrees.

    Every subtree has a unique vertex nearest to vertex 0, so the classes are
    the union over vertices of the free codes of their down-sets.
    """
    seen_rooted: Set[str] = set()
    out: Set[str] = set()
    for s in _down_sets(tree, 0, set_cap):
        for code in s:
            if code not in seen_rooted:
                seen_rooted.add(code)
                out.add(free_code_of_rooted(code))
    return SubtreeClassSet(frozenset(out), "free")


def ns(tree: LabeledTree, set_cap: int = DEFAULT_SET_CAP) -> int:
    """Number of pairwise nonisomorphic subtrees."""
    return len(ns_set(tree, set_cap))
