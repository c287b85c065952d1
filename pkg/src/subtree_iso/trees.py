"""Tree representation, parsing, canonical codes, centers and centroids.

Trees live on vertices ``0..n-1`` as an immutable adjacency tuple, optionally
with a distinguished root. Isomorphism classes are keyed by AHU parenthesis
strings: a rooted tree's code is ``"(" + sorted child codes + ")"`` and a free
tree's code is ``"U:"`` or ``"B:"`` followed by the rooted code(s) at its
center(s).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple


class TreeParseError(ValueError):
    """Raised on malformed tree text or edge data that is not a tree."""


@dataclass(frozen=True)
class LabeledTree:
    adj: Tuple[Tuple[int, ...], ...]
    root: Optional[int] = None

    def __post_init__(self):
        n = len(self.adj)
        if n == 0:
            raise TreeParseError("a tree needs at least one vertex")
        if self.root is not None and not 0 <= self.root < n:
            raise TreeParseError(f"root {self.root} out of range for order {n}")

    @property
    def order(self) -> int:
        return len(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   root: Optional[int] = None) -> "LabeledTree":
        """Build and validate a tree from an edge list on ``0..n-1``."""
        if n < 1:
            raise TreeParseError("order must be positive")
        adj: List[List[int]] = [[] for _ in range(n)]
        seen = set()
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeParseError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise TreeParseError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise TreeParseError(f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        if count != n - 1:
            raise TreeParseError(f"expected {n - 1} edges for order {n}, got {count}")
        if len(_bfs_order(adj, 0)[0]) != n:
            raise TreeParseError("edges do not form a connected graph")
        return cls(tuple(tuple(sorted(a)) for a in adj), root)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in self.adj[u] if u < v]

    def with_root(self, root: Optional[int]) -> "LabeledTree":
        return LabeledTree(self.adj, root)

    def require_root(self) -> int:
        if self.root is None:
            raise ValueError("operation requires a rooted tree")
        return self.root


def _bfs_order(adj: Sequence[Sequence[int]], start: int) -> Tuple[List[int], List[int]]:
    """Return (BFS order, parent array with -1 for the start / unreached)."""
    parent = [-1] * len(adj)
    seen = [False] * len(adj)
    seen[start] = True
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
                queue.append(v)
    return order, parent


def children_lists(tree: LabeledTree, root: int) -> Tuple[List[int], List[List[int]]]:
    """BFS order from ``root`` and each vertex's children in that orientation."""
    order, parent = _bfs_order(tree.adj, root)
    kids: List[List[int]] = [[] for _ in range(tree.order)]
    for v in order[1:]:
        kids[parent[v]].append(v)
    return order, kids


# ---------------------------------------------------------------------------
# small constructors
# ---------------------------------------------------------------------------

def path(n: int, root: Optional[int] = None) -> LabeledTree:
    return LabeledTree.from_edges(n, [(i, i + 1) for i in range(n - 1)], root)


def star(n: int, root: Optional[int] = None) -> LabeledTree:
    """Star ``K_{1,n-1}`` with hub 0."""
    return LabeledTree.from_edges(n, [(0, i) for i in range(1, n)], root)


def single_vertex() -> LabeledTree:
    return LabeledTree(((),), 0)


def relabel(tree: LabeledTree, perm: Sequence[int]) -> LabeledTree:
    """Move vertex ``v`` to ``perm[v]``."""
    n = tree.order
    adj: List[List[int]] = [[] for _ in range(n)]
    for u in range(n):
        adj[perm[u]] = sorted(perm[v] for v in tree.adj[u])
    root = None if tree.root is None else perm[tree.root]
    return LabeledTree(tuple(tuple(a) for a in adj), root)


def induced_subtree(tree: LabeledTree, vertices: Iterable[int],
                    root: Optional[int] = None) -> LabeledTree:
    """Subtree induced on a connected vertex subset, relabelled ``0..k-1`` in sorted order."""
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    adj = tuple(tuple(index[v] for v in tree.adj[u] if v in index) for u in vs)
    if sum(map(len, adj)) != 2 * (len(vs) - 1):
        raise ValueError("vertex subset does not induce a connected subtree")
    return LabeledTree(adj, None if root is None else index[root])


# ---------------------------------------------------------------------------
# level sequences
# ---------------------------------------------------------------------------

def tree_from_levels(levels: Sequence[int]) -> LabeledTree:
    """Decode a level sequence (root at level 1, preorder) into a tree rooted at 0."""
    if not levels:
        raise TreeParseError("empty level sequence")
    if levels[0] != 1:
        raise TreeParseError("level sequence must start at level 1")
    stack = [0]  # stack[d] = latest vertex at level d + 1
    edges = []
    for i in range(1, len(levels)):
        lv = levels[i]
        if lv < 2:
            raise TreeParseError(f"position {i}: only the root may sit at level 1")
        if lv > levels[i - 1] + 1:
            raise TreeParseError(f"position {i}: level {lv} skips past {levels[i - 1] + 1}")
        del stack[lv - 1:]
        edges.append((stack[-1], i))
        stack.append(i)
    return LabeledTree.from_edges(len(levels), edges, 0)


def canonical_levels(tree: LabeledTree, root: Optional[int] = None) -> List[int]:
    """Lexicographically maximal level sequence of the rooted tree."""
    r = tree.require_root() if root is None else root
    order, kids = children_lists(tree, r)
    seqs: List[List[int]] = [[] for _ in range(tree.order)]
    for v in reversed(order):
        subs = sorted((seqs[c] for c in kids[v]), reverse=True)
        seq = [1]
        for s in subs:
            seq.extend(x + 1 for x in s)
        seqs[v] = seq
    return seqs[r]


# ---------------------------------------------------------------------------
# canonical codes
# ---------------------------------------------------------------------------

def _codes_from(tree: LabeledTree, root: int, banned: int = -1) -> Tuple[List[str], List[int]]:
    """Rooted AHU code for every vertex reachable from ``root`` without passing ``banned``."""
    adj = tree.adj
    parent = {root: -1}
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for v in adj[u]:
            if v != banned and v not in parent:
                parent[v] = u
                order.append(v)
    codes: List[str] = [""] * tree.order
    for u in reversed(order):
        subs = sorted(codes[v] for v in adj[u] if v != banned and parent.get(v) == u)
        codes[u] = "(" + "".join(subs) + ")"
    return codes, order


def rooted_code(tree: LabeledTree, root: Optional[int] = None) -> str:
    """AHU code of ``tree`` rooted at ``root`` (default: the tree's own root)."""
    r = tree.require_root() if root is None else root
    if not 0 <= r < tree.order:
        raise ValueError(f"root {r} out of range")
    return _codes_from(tree, r)[0][r]


def all_down_codes(tree: LabeledTree, root: int) -> List[str]:
    """Rooted code of every vertex's descendant subtree, oriented away from ``root``."""
    return _codes_from(tree, root)[0]


def centers(tree: LabeledTree) -> List[int]:
    """Vertices of minimum eccentricity, by repeated leaf stripping."""
    n = tree.order
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in tree.adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for v in tree.adj[u]:
                deg[v] -= 1
                if deg[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def branch_sizes(tree: LabeledTree, v: int) -> List[int]:
    """Orders of the components of ``tree - v``."""
    order, kids = children_lists(tree, v)
    size = [1] * tree.order
    for u in reversed(order):
        for c in kids[u]:
            size[u] += size[c]
    return [size[c] for c in kids[v]]


def centroids(tree: LabeledTree) -> List[int]:
    """Vertices minimizing the total distance to all others."""
    n = tree.order
    order, kids = children_lists(tree, 0)
    size = [1] * n
    for u in reversed(order):
        for c in kids[u]:
            size[u] += size[c]
    # heaviest branch at u: its children subtrees, or everything above it
    best = n
    out: List[int] = []
    for u in range(n):
        heaviest = max([size[c] for c in kids[u]] + [n - size[u]])
        if heaviest < best:
            best, out = heaviest, [u]
        elif heaviest == best:
            out.append(u)
    return sorted(out)


def free_code(tree: LabeledTree) -> str:
    """Isomorphism-class key of the unrooted tree."""
    cs = centers(tree)
    if len(cs) == 1:
        return "U:" + rooted_code(tree, cs[0])
    a, b = cs
    ca = _codes_from(tree, a, banned=b)[0][a]
    cb = _codes_from(tree, b, banned=a)[0][b]
    return "B:" + "".join(sorted((ca, cb)))


# ---------------------------------------------------------------------------
# code <-> tree
# ---------------------------------------------------------------------------

def tree_from_code(code: str) -> LabeledTree:
    """Rebuild a rooted tree (root 0, preorder labels) from its AHU code."""
    if not code or code[0] != "(":
        raise ValueError(f"not a rooted code: {code!r}")
    edges = []
    stack: List[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            elif nxt:
                raise ValueError(f"code has more than one top-level tree: {code!r}")
            stack.append(nxt)
            nxt += 1
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced code: {code!r}")
            stack.pop()
        else:
            raise ValueError(f"bad character {ch!r} in rooted code")
    if stack:
        raise ValueError(f"unbalanced code: {code!r}")
    return LabeledTree.from_edges(nxt, edges, 0)


@lru_cache(maxsize=1 << 20)
def free_code_of_rooted(code: str) -> str:
    """Free code of the tree whose rooted code is ``code`` (forgetting the root)."""
    return free_code(tree_from_code(code))


def code_order(code: str) -> int:
    return code.count("(")


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

def join_at_root(branches: Sequence[LabeledTree]) -> LabeledTree:
    """New root 0 adjacent to the root of every branch, branches laid out in order."""
    edges = []
    offset = 1
    for b in branches:
        r = b.require_root()
        edges.extend((u + offset, v + offset) for u, v in b.edges())
        edges.append((0, r + offset))
        offset += b.order
    return LabeledTree.from_edges(offset, edges, 0)


def root_branches(tree: LabeledTree) -> List[LabeledTree]:
    """Components of ``tree - root``, each rooted at the old root's neighbour."""
    r = tree.require_root()
    out = []
    for c in tree.adj[r]:
        _, order = _codes_from(tree, c, banned=r)
        out.append(induced_subtree(tree, order, root=c))
    return out


def merge_at_root(first: LabeledTree, second: LabeledTree) -> LabeledTree:
    """Union of two rooted trees that share only their root."""
    return join_at_root(root_branches(first) + root_branches(second))


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

FORMATS = ("edgelist", "levelseq", "dot")


def parse_tree(text: str, fmt: str = "edgelist", root: Optional[int] = None) -> LabeledTree:
    """Parse edgelist or levelseq text. Level sequences are rooted at vertex 0."""
    if fmt == "levelseq":
        tokens = text.split()
        try:
            levels = [int(t) for t in tokens]
        except ValueError as exc:
            raise TreeParseError(f"malformed level sequence: {exc}") from None
        tree = tree_from_levels(levels)
        return tree if root is None else tree.with_root(root)
    if fmt != "edgelist":
        raise TreeParseError(f"cannot parse format {fmt!r}")

    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    n = None
    pairs = []
    for lineno, ln in enumerate(lines, 1):
        parts = ln.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise TreeParseError(f"line {lineno}: malformed line {ln!r}") from None
        if len(nums) == 1 and lineno == 1:
            n = nums[0]
        elif len(nums) == 2:
            pairs.append((nums[0], nums[1]))
        else:
            raise TreeParseError(f"line {lineno}: malformed line {ln!r}")
    if n is None:
        if not pairs:
            raise TreeParseError("empty edge list without an order header")
        n = max(max(p) for p in pairs) + 1
    return LabeledTree.from_edges(n, pairs, root)


def serialize_tree(tree: LabeledTree, fmt: str = "edgelist", name: str = "T") -> str:
    if fmt == "levelseq":
        if tree.root is None:
            raise ValueError("levelseq output needs a rooted tree")
        return " ".join(map(str, canonical_levels(tree)))
    start = 0 if tree.root is None else tree.root
    order, kids = children_lists(tree, start)
    codes = all_down_codes(tree, start)
    edges = []
    for u in order:
        for c in sorted(kids[u], key=lambda x: (codes[x], x)):
            edges.append((u, c))
    if fmt == "edgelist":
        return "\n".join([str(tree.order)] + [f"{u} {v}" for u, v in edges]) + "\n"
    if fmt == "dot":
        out = [f"graph {name} {{"]
        for v in range(tree.order):
            attr = ' [shape=box]' if v == tree.root else ""
            out.append(f"  {v}{attr};")
        out.extend(f"  {u} -- {v};" for u, v in edges)
        out.append("}")
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
