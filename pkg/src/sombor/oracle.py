"""Exhaustive certification of greedy-tree minimality via Prüfer codes.

Labeled trees in which vertex i has prescribed degree d_i correspond
exactly to the multiset permutations of the code {i repeated d_i - 1
times}, so enumerating those permutations enumerates the trees.  The
oracle scans them all, tracks the Sombor minimum, and compares it with
the greedy construction.

Two routes exist on purpose: `enumerate_trees` yields validated Tree
objects, while the scan inside `verify_minimality` decodes values only
(no Tree allocation) for large counts.  Tests hold the two routes to
identical minima on small sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .degrees import DegreeSequence
from .errors import BudgetExceededError
from .greedy import build_greedy_tree
from .tree import Tree

DEFAULT_BUDGET = 10**7
DEFAULT_TOLERANCE = 1e-9
DEFAULT_CLASS_LIMIT = 20000

# Two sums of at most n square roots of integers < 2n^2 either coincide
# or differ by far more than this at desk scale.
_TIE_EPS = 1e-12


def prufer_decode(code: Iterable[int], n: int) -> Tree:
    """The unique labeled tree on 0..n-1 with the given Prüfer code.

    Vertex degree equals 1 + multiplicity in the code.
    """
    code = list(code)
    if n < 2:
        raise ValueError(f"Prüfer decoding needs n >= 2, got n={n}")
    if len(code) != n - 2:
        raise ValueError(f"code length must be n-2={n - 2}, got {len(code)}")
    degree = [1] * n
    for v in code:
        if not 0 <= v < n:
            raise ValueError(f"code label {v} out of range for n={n}")
        degree[v] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for v in code:
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Tree(n, edges)


def prufer_encode(tree: Tree) -> list[int]:
    """Prüfer code of a tree, inverse of prufer_decode."""
    n = tree.n
    if n < 2:
        raise ValueError("Prüfer encoding needs n >= 2")
    deg = list(tree.degrees())
    # With degree-1 vertices, the neighbor sum IS the unique neighbor.
    nb = [sum(tree.neighbors(v)) for v in range(n)]
    code = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for _ in range(n - 2):
        p = nb[leaf]
        code.append(p)
        nb[p] -= leaf
        deg[p] -= 1
        deg[leaf] = 0
        if deg[p] == 1 and p < ptr:
            leaf = p
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    return code


def _coerce(seq: DegreeSequence | Iterable[int]) -> DegreeSequence:
    return seq if isinstance(seq, DegreeSequence) else DegreeSequence.normalize(seq)


def enumeration_count(seq: DegreeSequence | Iterable[int]) -> int:
    """(n-2)! / prod((d_i - 1)!) labeled trees realize the sequence."""
    seq = _coerce(seq)
    n = seq.total_vertices()
    count = math.factorial(n - 2)
    for d in seq:
        count //= math.factorial(d - 1)
    return count


def _base_code(seq: DegreeSequence) -> list[int]:
    code = []
    for i, d in enumerate(seq):
        code.extend([i] * (d - 1))
    return code


def _next_permutation(a: list[int]) -> bool:
    """Advance to the next lexicographic permutation in place."""
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1 :] = a[i + 1 :][::-1]
    return True


def enumerate_trees(
    seq: DegreeSequence | Iterable[int], budget: int = DEFAULT_BUDGET
) -> Iterator[Tree]:
    """Yield every labeled tree where internal vertex i has degree d_i.

    Codes are generated in lexicographic order; the total is checked
    against the multinomial count on exhaustion.  Raises
    BudgetExceededError before yielding anything if the count exceeds
    the budget.
    """
    seq = _coerce(seq)
    expected = enumeration_count(seq)
    if expected > budget:
        raise BudgetExceededError(expected, budget)
    n = seq.total_vertices()

    def _iter() -> Iterator[Tree]:
        code = _base_code(seq)
        seen = 0
        while True:
            yield prufer_decode(code, n)
            seen += 1
            if not _next_permutation(code):
                break
        if seen != expected:
            raise RuntimeError(
                f"enumeration produced {seen} trees, expected {expected}"
            )

    return _iter()


def _scan_min(seq: DegreeSequence) -> tuple[float, list[int], int]:
    """Minimum Sombor value over the enumeration, without building trees.

    Returns (min value, first code attaining it, scanned count).  Each
    code is pointer-decoded while summing precomputed edge weights.
    """
    k = len(seq)
    n = seq.total_vertices()
    base = list(seq.entries) + [1] * seq.leaf_count()
    weight = [[math.hypot(a, b) for b in base] for a in base]
    code = _base_code(seq)
    best = math.inf
    best_code = list(code)
    count = 0
    last = n - 1
    while True:
        count += 1
        deg = base.copy()
        total = 0.0
        ptr = k
        leaf = ptr
        for v in code:
            total += weight[v][leaf]
            d = deg[v] - 1
            deg[v] = d
            if d == 1 and v < ptr:
                leaf = v
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        total += weight[leaf][last]
        if total < best:
            best = total
            best_code = code.copy()
        if not _next_permutation(code):
            break
    return best, best_code, count


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of certifying one degree sequence against the oracle."""

    degree_sequence: DegreeSequence
    greedy_value: float
    oracle_min: float
    argmin: Tree
    labeled_count: int
    isomorphism_classes: Optional[int]
    passed: bool


def verify_minimality(
    seq: DegreeSequence | Iterable[int],
    budget: int = DEFAULT_BUDGET,
    tolerance: float = DEFAULT_TOLERANCE,
    class_limit: int = DEFAULT_CLASS_LIMIT,
) -> VerificationReport:
    """Certify that the greedy tree attains the enumeration minimum.

    Small enumerations (at most class_limit trees) run through Tree
    objects, count isomorphism classes, and pick the argmin with the
    lexicographically least canonical form among value ties; larger
    ones use the value-only scan and report isomorphism_classes=None.
    """
    seq = _coerce(seq)
    count = enumeration_count(seq)
    if count > budget:
        raise BudgetExceededError(count, budget)
    greedy_value = build_greedy_tree(seq).tree.sombor()
    if count <= class_limit:
        classes: set[str] = set()
        best_v = math.inf
        best_c = ""
        best_t: Optional[Tree] = None
        seen = 0
        for t in enumerate_trees(seq, budget):
            seen += 1
            v = t.sombor()
            c = t.canonical_form()
            classes.add(c)
            if best_t is None or v < best_v - _TIE_EPS:
                best_v, best_c, best_t = v, c, t
            elif v < best_v + _TIE_EPS and c < best_c:
                best_v, best_c, best_t = min(v, best_v), c, t
        oracle_min, argmin = best_v, best_t
        iso: Optional[int] = len(classes)
    else:
        oracle_min, best_code, seen = _scan_min(seq)
        argmin = prufer_decode(best_code, seq.total_vertices())
        iso = None
    if seen != count:
        raise RuntimeError(f"scanned {seen} trees, expected {count}")
    passed = (
        abs(greedy_value - oracle_min) <= tolerance
        and greedy_value <= oracle_min + tolerance
    )
    return VerificationReport(
        degree_sequence=seq,
        greedy_value=greedy_value,
        oracle_min=oracle_min,
        argmin=argmin,
        labeled_count=seen,
        isomorphism_classes=iso,
        passed=passed,
    )


def sweep_sequences(max_n: int) -> list[DegreeSequence]:
    """All internal degree sequences with total_vertices <= max_n, ascending.

    A sequence qualifies iff sum(d_i - 1) <= max_n - 2, so these are
    shifted partitions; the empty sequence (K2) is included.
    """
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    m = max_n - 2

    def parts(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for p in range(min(remaining, cap), 0, -1):
            for rest in parts(remaining - p, p):
                yield (p,) + rest

    seqs = {tuple(p + 1 for p in ps) for ps in parts(m, m)}
    return [DegreeSequence(s) for s in sorted(seqs)]


@dataclass(frozen=True)
class SweepRow:
    """One sweep entry; report is None when the budget skipped it."""

    sequence: DegreeSequence
    labeled_count: int
    report: Optional[VerificationReport]

    @property
    def skipped(self) -> bool:
        return self.report is None


def sweep_verify(
    max_n: int,
    budget: int = DEFAULT_BUDGET,
    tolerance: float = DEFAULT_TOLERANCE,
    class_limit: int = 0,
) -> Iterator[SweepRow]:
    """Verify every sequence up to max_n vertices, skipping over-budget ones."""
    for seq in sweep_sequences(max_n):
        count = enumeration_count(seq)
        if count > budget:
            yield SweepRow(seq, count, None)
            continue
        report = verify_minimality(
            seq, budget=budget, tolerance=tolerance, class_limit=class_limit
        )
        yield SweepRow(seq, count, report)
