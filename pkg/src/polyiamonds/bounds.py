"""Closed-form extremal quantities: minimum perimeter and the hole bound."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


def p_min(n: int) -> int:
    """Least perimeter of an ``n``-tile polyiamond, 2*ceil((n + sqrt(6n))/2) - n.

    Evaluated exactly: with s = isqrt(6n), the ceiling is (n + s + 1) // 2
    when 6n is a perfect square and (n + s) // 2 + 1 otherwise.
    """
    if n < 1:
        raise ValueError(f"p_min needs n >= 1, got {n}")
    s = isqrt(6 * n)
    if s * s == 6 * n:
        ceil_half = (n + s + 1) // 2
    else:
        ceil_half = (n + s) // 2 + 1
    return 2 * ceil_half - n


def b_min(n: int) -> int:
    if n < 1:
        raise ValueError(f"b_min needs n >= 1, got {n}")
    return n - 1


@dataclass(frozen=True)
class BoundReport:
    n: int
    h: int
    p_min_at_n_plus_h: int
    m_value: Fraction

    @property
    def feasible(self) -> bool:
        return self.m_value >= self.h

    def as_row(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "p_min(n+h)": self.p_min_at_n_plus_h,
            "M": str(self.m_value),
            "feasible": self.feasible,
        }


def m_bound(n: int, h: int) -> BoundReport:
    """Upper bound on the holes of an ``n``-tile polyiamond that has ``h`` holes."""
    if n < 1:
        raise ValueError(f"m_bound needs n >= 1, got {n}")
    if h < 0:
        raise ValueError(f"hole count must be >= 0, got {h}")
    p = p_min(n + h)
    return BoundReport(n, h, p, Fraction(n + 2 - p, 3))


def g_lower_bound(h: int) -> int:
    """Least ``n`` with M(n, h) >= h; no polyiamond with ``h`` holes is smaller."""
    if h < 1:
        raise ValueError(f"g_lower_bound needs h >= 1, got {h}")
    # every hole is bounded by at least three edges, so n < 3h is hopeless
    n = 3 * h
    while n + 2 - p_min(n + h) < 3 * h:
        n += 1
    return n


def f_upper_bound(n: int) -> int:
    """Largest ``h`` that M(n, h) does not rule out for ``n`` tiles."""
    h = 0
    while m_bound(n, h + 1).feasible:
        h += 1
    return h


def interior_edge_budget(n: int, h: int) -> int:
    """Most interior edges an ``n``-tile polyiamond with at least ``h`` holes can have.

    From 3h' <= 3n - 2b - p_min(n + h') and the fact that 3h' + p_min(n + h')
    strictly increases with h'.
    """
    return (3 * n - 3 * h - p_min(n + h)) // 2


def verify_pmin_increments(n_max: int) -> bool:
    """Check unit increments of p_min and both drop bounds on 1..n_max.

    The drop bounds are checked for every pair n < n + k <= n_max using a
    running suffix minimum, not a sample.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    p = [0] + [p_min(n) for n in range(1, n_max + 1)]
    for n in range(1, n_max):
        if abs(p[n + 1] - p[n]) != 1:
            return False
    suffix_min = p[n_max]
    for n in range(n_max - 1, 0, -1):
        # suffix_min = min(p[n+1:])
        if suffix_min < p[n] - 1:
            return False
        if p[n + 1] == p[n] + 1 and suffix_min < p[n]:
            return False
        suffix_min = min(suffix_min, p[n])
    return True
