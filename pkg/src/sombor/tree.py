"""Labeled trees on vertices 0..n-1 and degree-based indices.

A Tree is validated on construction and immutable afterwards.  Edges are
stored sorted with each pair normalized to (min, max), so equal trees
compare equal and every traversal below is deterministic.
"""

from __future__ import annotations

import json
import math
from typing import Callable, Iterable

from .degrees import DegreeSequence
from .errors import InvalidTreeError
from .weights import edge_weight

Edge = tuple[int, int]
WeightFunction = Callable[[int, int], float]


class Tree:
    """A labeled simple tree on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise InvalidTreeError(f"need at least one vertex, got n={n}")
        norm: list[Edge] = []
        seen: set[Edge] = set()
        # Union-find: with n-1 edges a cycle and a disconnection always
        # come together, so report whichever witness appears first.
        root = list(range(n))

        def find(x: int) -> int:
            while root[x] != x:
                root[x] = root[root[x]]
                x = root[x]
            return x

        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidTreeError(
                    f"vertex label out of range in edge ({u}, {v}) for n={n}"
                )
            if u == v:
                raise InvalidTreeError(f"cycle detected: self-loop at {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InvalidTreeError(f"duplicate edge {e}")
            seen.add(e)
            ru, rv = find(u), find(v)
            if ru == rv:
                raise InvalidTreeError(f"cycle detected: edge {e} closes a cycle")
            root[ru] = rv
            norm.append(e)
        if len({find(v) for v in range(n)}) > 1:
            raise InvalidTreeError("not connected")
        if len(norm) != n - 1:
            raise InvalidTreeError(
                f"wrong edge count: expected {n - 1}, got {len(norm)}"
            )
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(norm))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adj
        )

    # -- structure ---------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self._adj)

    def is_pendant(self, v: int) -> bool:
        return self.degree(v) == 1

    def internal_degree_sequence(self) -> DegreeSequence:
        return DegreeSequence.normalize(d for d in self.degrees() if d >= 2)

    def relabel(self, mapping: dict[int, int] | list[int]) -> "Tree":
        """Return the tree with vertex v renamed to mapping[v]."""
        if isinstance(mapping, dict):
            img = [mapping[v] for v in range(self.n)]
        else:
            img = list(mapping)
        if sorted(img) != list(range(self.n)):
            raise InvalidTreeError("relabel mapping is not a bijection on 0..n-1")
        return Tree(self.n, [(img[u], img[v]) for u, v in self.edges])

    # -- indices -----------------------------------------------------

    def index(self, weight: WeightFunction) -> float:
        """Sum of weight(d(u), d(v)) over all edges uv.

        The weight must be symmetric in its arguments.  fsum keeps the
        total correctly rounded regardless of edge count.
        """
        deg = self.degrees()
        return math.fsum(weight(deg[u], deg[v]) for u, v in self.edges)

    def sombor(self) -> float:
        """Sombor index, sum of sqrt(d(u)^2 + d(v)^2) over edges."""
        return self.index(edge_weight)

    # -- isomorphism -------------------------------------------------

    def centers(self) -> tuple[int, ...]:
        """The one or two middle vertices of the tree."""
        if self.n <= 2:
            return tuple(range(self.n))
        deg = list(self.degrees())
        layer = [v for v in range(self.n) if deg[v] == 1]
        remaining = self.n
        while remaining > 2:
            remaining -= len(layer)
            nxt = []
            for v in layer:
                deg[v] = 0
                for w in self._adj[v]:
                    if deg[w] > 1:
                        deg[w] -= 1
                        if deg[w] == 1:
                            nxt.append(w)
            layer = nxt
        return tuple(sorted(layer))

    def _ahu(self, root: int) -> str:
        order: list[int] = []
        parent = [-1] * self.n
        stack = [root]
        parent[root] = root
        while stack:
            v = stack.pop()
            order.append(v)
            for w in self._adj[v]:
                if parent[w] == -1:
                    parent[w] = v
                    stack.append(w)
        enc = [""] * self.n
        for v in reversed(order):
            kids = sorted(enc[w] for w in self._adj[v] if parent[w] == v and w != v)
            enc[v] = "(" + "".join(kids) + ")"
        return enc[root]

    def canonical_form(self) -> str:
        """Isomorphism-invariant string: AHU encoding rooted at the center.

        Two trees are isomorphic iff their canonical forms are equal.
        """
        return min(self._ahu(c) for c in self.centers())

    # -- serialization -----------------------------------------------

    @classmethod
    def from_edge_list(cls, text: str) -> "Tree":
        """Parse the plain text format: first line n, then one 'u v' per line.

        Blank lines and lines starting with '#' are ignored.
        """
        lines = [
            ln.strip()
            for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")
        ]
        if not lines:
            raise InvalidTreeError("empty edge list input")
        try:
            n = int(lines[0])
        except ValueError:
            raise InvalidTreeError(
                f"first line must be the vertex count, got {lines[0]!r}"
            ) from None
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise InvalidTreeError(f"malformed edge line {ln!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise InvalidTreeError(f"malformed edge line {ln!r}") from None
        return cls(n, edges)

    def to_edge_list(self) -> str:
        lines = [str(self.n)]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Tree":
        """Parse {"n": int, "edges": [[u, v], ...]}."""
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidTreeError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise InvalidTreeError('JSON tree needs keys "n" and "edges"')
        n = obj["n"]
        edges = obj["edges"]
        if not isinstance(n, int) or not isinstance(edges, list):
            raise InvalidTreeError('"n" must be an int and "edges" a list')
        pairs = []
        for e in edges:
            if (
                not isinstance(e, list)
                or len(e) != 2
                or not all(isinstance(x, int) for x in e)
            ):
                raise InvalidTreeError(f"malformed edge {e!r}")
            pairs.append((e[0], e[1]))
        return cls(n, pairs)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]})

    def to_dot(self, name: str = "tree") -> str:
        lines = [f"graph {name} {{"]
        lines.extend(f"  {u} -- {v};" for u, v in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"

    # -- dunder ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"
