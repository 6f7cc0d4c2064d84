"""Sombor-index extremal trees: greedy construction, swap descent, oracle.

The Sombor index of a graph sums sqrt(d(u)^2 + d(v)^2) over its edges.
Among trees realizing a fixed internal degree sequence, the greedy tree
minimizes it.  This package builds the greedy tree, computes degree-based
indices, improves arbitrary trees by degree-preserving edge swaps, and
certifies minimality by exhaustive Prüfer-code enumeration at small n.
"""

from .decompose import (
    DecompositionStep,
    attach,
    base_value,
    decompose,
    incremental_sombor,
    replay_totals,
    strip_last,
)
from .degrees import DegreeSequence
from .errors import (
    BudgetExceededError,
    InvalidDegreeSequenceError,
    InvalidTreeError,
    StaleSwapError,
    StepLimitError,
)
from .greedy import (
    PathWitness,
    RootedTree,
    build_greedy_tree,
    check_level_monotonicity,
    check_path_condition,
    check_subtree_property,
    find_path_violation,
    iter_path_violations,
    leaf_levels,
)
from .oracle import (
    DEFAULT_BUDGET,
    DEFAULT_TOLERANCE,
    SweepRow,
    VerificationReport,
    enumerate_trees,
    enumeration_count,
    prufer_decode,
    prufer_encode,
    sweep_sequences,
    sweep_verify,
    verify_minimality,
)
from .swaps import (
    EdgeSwap,
    LocalSearchResult,
    apply_swap,
    find_improving_swap,
    local_search,
    swap_from_witness,
)
from .tree import Tree
from .weights import edge_weight, g_gap, h_gap

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "DEFAULT_TOLERANCE",
    "DecompositionStep",
    "DegreeSequence",
    "EdgeSwap",
    "InvalidDegreeSequenceError",
    "InvalidTreeError",
    "LocalSearchResult",
    "PathWitness",
    "RootedTree",
    "StaleSwapError",
    "StepLimitError",
    "SweepRow",
    "Tree",
    "VerificationReport",
    "apply_swap",
    "attach",
    "base_value",
    "build_greedy_tree",
    "check_level_monotonicity",
    "check_path_condition",
    "check_subtree_property",
    "decompose",
    "edge_weight",
    "enumerate_trees",
    "enumeration_count",
    "find_improving_swap",
    "find_path_violation",
    "g_gap",
    "h_gap",
    "incremental_sombor",
    "iter_path_violations",
    "leaf_levels",
    "local_search",
    "prufer_decode",
    "prufer_encode",
    "replay_totals",
    "strip_last",
    "swap_from_witness",
    "sweep_sequences",
    "sweep_verify",
    "verify_minimality",
    "__version__",
]
