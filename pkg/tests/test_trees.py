import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import (
    isomorphic_by_backtracking,
    isomorphic_by_permutation,
    random_relabel,
    random_tree,
    trees,
)
from subtree_iso.counting import nr
from subtree_iso.paperlab import build_construction
from subtree_iso.treegen import gen_free_trees, gen_labeled_trees, gen_rooted_trees
from subtree_iso.trees import (
    LabeledTree,
    TreeParseError,
    branch_sizes,
    canonical_levels,
    centers,
    centroids,
    free_code,
    join_at_root,
    parse_tree,
    path,
    relabel,
    root_branches,
    rooted_code,
    serialize_tree,
    single_vertex,
    star,
    tree_from_code,
)


# -- parsing / serialization ---------------------------------------------------

def test_parse_edgelist_path():
    t = parse_tree("0 1\n1 2", "edgelist")
    assert t.order == 3
    assert t.edges() == [(0, 1), (1, 2)]


def test_parse_levelseq_is_e5():
    t = parse_tree("1 2 3 2", "levelseq")
    assert t.root == 0 and t.order == 4
    assert sorted(len(a) for a in t.adj) == [1, 1, 2, 2]
    assert nr(t) == 5


def test_parse_edgelist_with_header():
    assert parse_tree("1\n", "edgelist").order == 1
    assert parse_tree("3\n0 1\n0 2\n").order == 3


@pytest.mark.parametrize("text,fmt,msg", [
    ("0 1\n0 1", "edgelist", "duplicate"),
    ("0 1\n1 2\n2 0", "edgelist", "edges"),
    ("4\n0 1\n2 3\n0 1", "edgelist", "duplicate"),
    ("4\n0 1\n2 3\n1 0", "edgelist", "duplicate"),
    ("0 1 2", "edgelist", "malformed"),
    ("a b", "edgelist", "malformed"),
    ("4\n0 1\n2 3\n", "edgelist", "expected 3 edges"),
    ("5\n0 1\n1 2\n2 0\n3 4", "edgelist", "connected"),
    ("2 3", "levelseq", "start at level 1"),
    ("1 3", "levelseq", "skips"),
    ("1 2 1", "levelseq", "root"),
    ("1 x", "levelseq", "malformed"),
])
def test_parse_errors(text, fmt, msg):
    with pytest.raises(TreeParseError, match=msg):
        parse_tree(text, fmt)


def test_serialize_single_vertex_edgelist():
    assert serialize_tree(single_vertex(), "edgelist") == "1\n"


def test_serialize_e2_levelseq():
    assert serialize_tree(path(2, root=0), "levelseq") == "1 2"


def test_serialize_levelseq_needs_root():
    with pytest.raises(ValueError):
        serialize_tree(path(3), "levelseq")


def test_serialize_dot_p3():
    dot = serialize_tree(path(3), "dot")
    assert dot.count("--") == 2
    assert dot.startswith("graph T {") and dot.rstrip().endswith("}")


@given(trees(1, 14))
def test_edgelist_roundtrip(t):
    back = parse_tree(serialize_tree(t, "edgelist"), "edgelist")
    assert free_code(back) == free_code(t)


@given(trees(1, 14, rooted=True))
def test_levelseq_roundtrip(t):
    back = parse_tree(serialize_tree(t, "levelseq"), "levelseq")
    assert rooted_code(back) == rooted_code(t)


def test_generated_sequences_are_canonical():
    from subtree_iso.treegen import rooted_level_sequences
    for n in range(1, 10):
        for levels in rooted_level_sequences(n):
            tree = parse_tree(" ".join(map(str, levels)), "levelseq")
            assert canonical_levels(tree) == levels


# -- canonical codes --------------------------------------------------------------

def test_rooted_code_examples():
    assert rooted_code(single_vertex()) == "()"
    assert rooted_code(star(4), 0) == "(()()())"
    # children "()" and "(())" sorted bytewise: "(" < ")" puts "(())" first
    assert rooted_code(parse_tree("1 2 3 2", "levelseq")) == "((())())"


def test_free_code_examples():
    assert free_code(path(2)) == "B:" + "()" + "()"
    assert free_code(path(3)) == "U:(()())"


def test_code_roundtrip_via_tree_from_code(rng):
    for _ in range(200):
        t = random_tree(rng.randint(1, 15), rng, rooted=True)
        code = rooted_code(t)
        assert rooted_code(tree_from_code(code)) == code


@pytest.mark.parametrize("n", range(1, 7))
def test_rooted_code_matches_permutation_isomorphism(n):
    reps = list(gen_rooted_trees(n))
    codes = [rooted_code(t) for t in reps]
    for (a, ca), (b, cb) in itertools.combinations(zip(reps, codes), 2):
        assert (ca == cb) == isomorphic_by_permutation(a, a.root, b, b.root)


@pytest.mark.parametrize("n", [7, 8])
def test_rooted_code_matches_backtracking_isomorphism(n, rng):
    reps = list(gen_rooted_trees(n))
    for a, b in itertools.combinations(reps, 2):
        assert not isomorphic_by_backtracking(a, 0, b, 0)
    # every rooting of random labeled trees: equal codes exactly when isomorphic
    sample = [random_tree(n, rng, rooted=True) for _ in range(60)]
    for a, b in itertools.combinations(sample, 2):
        same = rooted_code(a) == rooted_code(b)
        assert same == isomorphic_by_backtracking(a, a.root, b, b.root)


def test_backtracking_agrees_with_permutation_oracle(rng):
    for _ in range(150):
        n = rng.randint(1, 6)
        a, b = random_tree(n, rng, rooted=True), random_tree(n, rng, rooted=True)
        assert isomorphic_by_backtracking(a, a.root, b, b.root) == \
            isomorphic_by_permutation(a, a.root, b, b.root)


def test_free_code_nine_vertex_relabelings(rng):
    t = random_tree(9, rng)
    code = free_code(t)
    for _ in range(20):
        assert free_code(random_relabel(t, rng)) == code


@pytest.mark.parametrize("n", range(1, 7))
def test_free_codes_separate_labeled_trees(n):
    """Labeled trees bucketed by free code: one bucket per isomorphism class."""
    buckets = {}
    for t in gen_labeled_trees(n):
        rep = buckets.setdefault(free_code(t), t)
        assert isomorphic_by_permutation(t, None, rep, None)
    for a, b in itertools.combinations(buckets.values(), 2):
        assert not isomorphic_by_permutation(a, None, b, None)


def test_free_codes_distinct_on_catalog():
    for n in range(1, 11):
        codes = [free_code(t) for t in gen_free_trees(n)]
        assert len(set(codes)) == len(codes)


@given(trees(1, 16))
def test_free_code_invariant_under_relabeling(t):
    rng = random.Random(t.order)
    assert free_code(random_relabel(t, rng)) == free_code(t)


@given(trees(1, 16, rooted=True))
def test_rooted_code_invariant_under_relabeling(t):
    rng = random.Random(len(t.edges()))
    assert rooted_code(random_relabel(t, rng)) == rooted_code(t)


# -- centers / centroids -------------------------------------------------------------

def _dist_oracle(t):
    import collections
    out = []
    for s in range(t.order):
        d = {s: 0}
        q = collections.deque([s])
        while q:
            u = q.popleft()
            for v in t.adj[u]:
                if v not in d:
                    d[v] = d[u] + 1
                    q.append(v)
        out.append([d[v] for v in range(t.order)])
    return out


def test_centers_centroids_examples():
    assert centers(path(4)) == [1, 2]
    assert centroids(path(4)) == [1, 2]
    assert centers(star(5)) == [0] and centroids(star(5)) == [0]


def test_c12_centroid_branches_at_most_half():
    t = build_construction(12).tree
    for c in centroids(t):
        assert max(branch_sizes(t, c)) <= 6


@given(trees(1, 18))
def test_centers_and_centroids_match_distance_definitions(t):
    d = _dist_oracle(t)
    ecc = [max(row) for row in d]
    tot = [sum(row) for row in d]
    assert centers(t) == [v for v in range(t.order) if ecc[v] == min(ecc)]
    assert centroids(t) == [v for v in range(t.order) if tot[v] == min(tot)]
    for group in (centers(t), centroids(t)):
        assert len(group) in (1, 2)
        if len(group) == 2:
            assert group[1] in t.adj[group[0]]


def test_centroid_branches_exhaustive():
    for n in range(1, 11):
        for t in gen_free_trees(n):
            for c in centroids(t):
                assert max(branch_sizes(t, c), default=0) <= n // 2


# -- assembly -------------------------------------------------------------------------

def test_join_examples():
    assert join_at_root([]).order == 1
    e1 = single_vertex()
    e2 = path(2, root=0)
    e5 = join_at_root([e1, e2])
    assert e5.order == 4 and nr(e5) == 5
    assert rooted_code(e5) == rooted_code(parse_tree("1 2 3 2", "levelseq"))
    k14 = join_at_root([e1] * 4)
    assert rooted_code(k14) == rooted_code(star(5), 0)
    assert nr(k14) == 5


@given(trees(1, 12, rooted=True))
def test_root_branches_rejoin(t):
    assert rooted_code(join_at_root(root_branches(t))) == rooted_code(t)


def test_relabel_preserves_edges():
    t = path(4)
    r = relabel(t, [3, 2, 1, 0])
    assert sorted(r.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_labeled_tree_validation():
    with pytest.raises(TreeParseError):
        LabeledTree((), None)
    with pytest.raises(TreeParseError):
        LabeledTree(((),), 3)
