"""Nonisomorphic subtrees of trees: counting, extremal search, proof checks."""

from .counting import (
    ResourceLimitError,
    SubtreeClassSet,
    count_subtrees_avoiding,
    count_subtrees_total,
    enumerate_subtrees,
    nr,
    nr_bruteforce,
    nr_set,
    ns,
    ns_bruteforce,
    ns_set,
)
from .extremal import ExtremalRecord, compute_R, compute_S, table
from .paperlab import (
    Construction,
    ExceptionalCatalog,
    VerificationReport,
    build_construction,
    construction_bound,
    find_exceptional,
)
from .treegen import gen_free_trees, gen_rooted_trees
from .trees import (
    LabeledTree,
    TreeParseError,
    centers,
    centroids,
    free_code,
    join_at_root,
    parse_tree,
    rooted_code,
    serialize_tree,
)

__version__ = "0.1.0"
