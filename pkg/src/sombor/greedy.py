"""Greedy tree construction and the structural predicates it satisfies.

The greedy tree for an internal degree sequence hands out the largest
remaining degrees level by level from a maximum-degree root, always
expanding the labeled vertex of largest degree first.  Among trees
realizing the sequence it minimizes the Sombor index; the predicates
below (path condition, subtree property, level monotonicity) are the
structural fingerprints of that minimality.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

from .degrees import DegreeSequence
from .tree import Tree


@dataclass(frozen=True, eq=False)
class RootedTree:
    """A tree plus a distinguished root and its BFS layering."""

    tree: Tree
    root: int
    parent: dict[int, int]
    bfs_order: tuple[int, ...]
    children: dict[int, tuple[int, ...]]

    @classmethod
    def from_tree(cls, tree: Tree, root: int = 0) -> "RootedTree":
        """Root an existing tree; children are visited in ascending label order."""
        if not 0 <= root < tree.n:
            raise ValueError(f"root {root} out of range for n={tree.n}")
        parent: dict[int, int] = {}
        children: dict[int, tuple[int, ...]] = {}
        order = [root]
        seen = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            kids = []
            for w in tree.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    parent[w] = v
                    kids.append(w)
                    order.append(w)
                    queue.append(w)
            children[v] = tuple(kids)
        return cls(tree, root, parent, tuple(order), children)

    def parent_of(self, v: int) -> Optional[int]:
        return self.parent.get(v)

    @property
    def n(self) -> int:
        return self.tree.n


def build_greedy_tree(seq: DegreeSequence | Iterable[int]) -> RootedTree:
    """Construct the greedy tree for an internal degree sequence.

    The root gets degree d1; each expanded vertex hands the largest
    remaining degrees to its children in non-increasing order, and the
    vertex with the largest degree (lowest label on ties) is expanded
    next.  Internal vertices are labeled 0..k-1 in assignment order,
    leaves k..n-1.  The empty sequence yields K2.
    """
    if not isinstance(seq, DegreeSequence):
        seq = DegreeSequence.normalize(seq)
    k = len(seq)
    if k == 0:
        tree = Tree(2, [(0, 1)])
        return RootedTree(tree, 0, {1: 0}, (0, 1), {0: (1,), 1: ()})
    n = seq.total_vertices()
    # Largest remaining degree is always the next unconsumed pool entry.
    pool = list(seq.entries[1:]) + [1] * seq.leaf_count()
    ptr = 0
    next_internal, next_leaf = 1, k
    heap: list[tuple[int, int]] = [(-seq[0], 0)]
    edges: list[tuple[int, int]] = []
    parent: dict[int, int] = {}
    order = [0]
    children: dict[int, tuple[int, ...]] = {}
    while heap:
        negd, u = heapq.heappop(heap)
        slots = -negd if u == 0 else -negd - 1
        kids = []
        for _ in range(slots):
            d = pool[ptr]
            ptr += 1
            if d >= 2:
                c = next_internal
                next_internal += 1
                heapq.heappush(heap, (-d, c))
            else:
                c = next_leaf
                next_leaf += 1
            edges.append((u, c))
            parent[c] = u
            order.append(c)
            kids.append(c)
        children[u] = tuple(kids)
    for v in range(n):
        children.setdefault(v, ())
    assert ptr == len(pool) and len(order) == n
    return RootedTree(Tree(n, edges), 0, parent, tuple(order), children)


class PathWitness(NamedTuple):
    """A path v1..vt violating the path condition.

    d(first) < d(last) but d(second) > d(second_last); second and
    second_last are the path neighbors of the endpoints.
    """

    first: int
    second: int
    second_last: int
    last: int


def iter_path_violations(tree: Tree) -> Iterator[PathWitness]:
    """Yield all path-condition violations, lexicographic by (first, last).

    One BFS per candidate first endpoint gives, for every other vertex,
    its path predecessor and the second vertex on the path, so each
    ordered pair is inspected in O(1).
    """
    deg = tree.degrees()
    n = tree.n
    for v1 in range(n):
        parent = [-1] * n
        dist = [-1] * n
        second = [-1] * n
        dist[v1] = 0
        queue = deque([v1])
        while queue:
            v = queue.popleft()
            for w in tree.neighbors(v):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    second[w] = w if v == v1 else second[v]
                    queue.append(w)
        for vt in range(n):
            if dist[vt] >= 3 and deg[v1] < deg[vt] and deg[second[vt]] > deg[parent[vt]]:
                yield PathWitness(v1, second[vt], parent[vt], vt)


def find_path_violation(tree: Tree) -> Optional[PathWitness]:
    """First path-condition violation in scan order, or None."""
    return next(iter_path_violations(tree), None)


def check_path_condition(tree: Tree) -> bool:
    """True iff every path v1..vt (t >= 4) with d(v1) < d(vt) has d(v2) <= d(v_{t-1})."""
    return find_path_violation(tree) is None


def check_subtree_property(tree: Tree, d: int) -> bool:
    """True iff the vertices of degree >= d induce a connected subgraph or none exist."""
    if d < 1:
        raise ValueError(f"degree threshold must be >= 1, got {d}")
    members = {v for v in range(tree.n) if tree.degree(v) >= d}
    if not members:
        return True
    start = next(iter(members))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in tree.neighbors(v):
            if w in members and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(members)


def leaf_levels(tree: Tree) -> list[int]:
    """Level of each vertex: minimum distance to a pendant vertex."""
    level = [-1] * tree.n
    queue = deque()
    for v in range(tree.n):
        if tree.degree(v) <= 1:
            level[v] = 0
            queue.append(v)
    while queue:
        v = queue.popleft()
        for w in tree.neighbors(v):
            if level[w] == -1:
                level[w] = level[v] + 1
                queue.append(w)
    return level


def check_level_monotonicity(t: RootedTree | Tree) -> bool:
    """True iff max degree in level set L_i <= min degree in L_{i+1} for all i."""
    tree = t.tree if isinstance(t, RootedTree) else t
    level = leaf_levels(tree)
    top = max(level)
    lo = [float("inf")] * (top + 1)
    hi = [float("-inf")] * (top + 1)
    for v in range(tree.n):
        d = tree.degree(v)
        lo[level[v]] = min(lo[level[v]], d)
        hi[level[v]] = max(hi[level[v]], d)
    return all(hi[i] <= lo[i + 1] for i in range(top))
