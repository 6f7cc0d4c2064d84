"""Scalar edge weights and the comparison gaps behind the edge swap.

The Sombor weight of an edge whose endpoints have degrees x and y is
sqrt(x^2 + y^2).  The two gap functions compare such weights across a
shared endpoint and carry the monotonicity facts the optimizer relies
on: ``g_gap(a, b, x)`` is negative and strictly increasing in x,
``h_gap(a, x)`` is positive and strictly decreasing in x.
"""

import math


def edge_weight(x: float, y: float) -> float:
    """Weight sqrt(x^2 + y^2) of an edge with endpoint degrees x and y."""
    if x < 1 or y < 1:
        raise ValueError(f"degrees must be >= 1, got ({x}, {y})")
    return math.hypot(x, y)


def g_gap(a: float, b: float, x: float) -> float:
    """edge_weight(x, a) - edge_weight(x, b) for b > a >= 1.

    Strictly negative and strictly increasing in x: moving the shared
    endpoint degree x up shrinks the penalty for the heavier far end.
    """
    if b <= a:
        raise ValueError(f"g_gap needs b > a, got a={a}, b={b}")
    return edge_weight(x, a) - edge_weight(x, b)


def h_gap(a: float, x: float) -> float:
    """edge_weight(a, x) - edge_weight(x, 1) for a > 1.

    Strictly positive and strictly decreasing in x; equals -g_gap(1, a, x).
    """
    if a <= 1:
        raise ValueError(f"h_gap needs a > 1, got a={a}")
    return edge_weight(a, x) - edge_weight(x, 1)
