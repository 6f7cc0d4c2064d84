"""Improving edge swaps and first-improvement descent.

A witness path v1..vt with d(v1) < d(vt) and d(v2) > d(v_{t-1}) yields
the degree-preserving move: remove v1v2 and v_{t-1}vt, add v1v_{t-1}
and v2vt.  The move keeps every vertex degree, keeps the graph a tree,
and strictly decreases the Sombor index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import StaleSwapError, StepLimitError
from .greedy import PathWitness, iter_path_violations
from .tree import Edge, Tree
from .weights import g_gap


@dataclass(frozen=True)
class EdgeSwap:
    """A single improving move and its exact predicted effect."""

    removed: tuple[Edge, Edge]
    added: tuple[Edge, Edge]
    predicted_delta: float
    witness: PathWitness


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def swap_from_witness(tree: Tree, w: PathWitness) -> EdgeSwap:
    """Build the Proposition move for a witness path."""
    deg = tree.degrees()
    a, b = deg[w.first], deg[w.last]
    delta = g_gap(a, b, deg[w.second_last]) - g_gap(a, b, deg[w.second])
    return EdgeSwap(
        removed=(_norm(w.first, w.second), _norm(w.second_last, w.last)),
        added=(_norm(w.first, w.second_last), _norm(w.second, w.last)),
        predicted_delta=delta,
        witness=w,
    )


def find_improving_swap(tree: Tree, best_improvement: bool = False) -> Optional[EdgeSwap]:
    """First improving swap in (v1, vt) scan order, or None at a fixed point.

    With best_improvement, scans all witnesses and returns the swap of
    most negative predicted delta (scan order breaks ties).
    """
    if not best_improvement:
        w = next(iter_path_violations(tree), None)
        return None if w is None else swap_from_witness(tree, w)
    best: Optional[EdgeSwap] = None
    for w in iter_path_violations(tree):
        s = swap_from_witness(tree, w)
        if best is None or s.predicted_delta < best.predicted_delta:
            best = s
    return best


def apply_swap(tree: Tree, swap: EdgeSwap) -> Tree:
    """Apply a swap produced for this tree; validates the result."""
    current = set(tree.edges)
    for e in swap.removed:
        if e not in current:
            raise StaleSwapError(f"stale swap: edge {e} not in tree")
    current.difference_update(swap.removed)
    current.update(swap.added)
    return Tree(tree.n, sorted(current))


@dataclass
class LocalSearchResult:
    """Descent trajectory: final tree plus the swaps that got there."""

    tree: Tree
    start_value: float
    final_value: float
    swaps: list[EdgeSwap] = field(default_factory=list)
    values: list[float] = field(default_factory=list)

    @property
    def steps(self) -> int:
        return len(self.swaps)


def local_search(
    tree: Tree,
    step_limit: Optional[int] = None,
    best_improvement: bool = False,
) -> LocalSearchResult:
    """Apply improving swaps until none exists.

    Terminates because each swap strictly decreases the index over a
    finite tree space; the step guard (default 10 n^2) only trips on a
    bug.  The result always satisfies the path condition.
    """
    limit = 10 * tree.n * tree.n if step_limit is None else step_limit
    start = tree.sombor()
    result = LocalSearchResult(tree=tree, start_value=start, final_value=start)
    while True:
        swap = find_improving_swap(result.tree, best_improvement)
        if swap is None:
            return result
        if len(result.swaps) >= limit:
            raise StepLimitError(
                f"local search exceeded {limit} steps; descent should be strict"
            )
        result.tree = apply_swap(result.tree, swap)
        result.swaps.append(swap)
        result.final_value = result.tree.sombor()
        result.values.append(result.final_value)
