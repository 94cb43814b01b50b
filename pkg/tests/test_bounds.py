import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyiamonds.bounds import (
    b_min, f_upper_bound, g_lower_bound, interior_edge_budget, m_bound, p_min,
    verify_pmin_increments,
)


def pmin_reference(n):
    """Ceiling of (n + sqrt(6n)) / 2 by binary search on exact squares."""
    # smallest c with 2c - n >= sqrt(6n), i.e. (2c - n)^2 >= 6n and 2c >= n
    lo, hi = 0, n + 10
    while lo < hi:
        c = (lo + hi) // 2
        if 2 * c - n >= 0 and (2 * c - n) ** 2 >= 6 * n:
            hi = c
        else:
            lo = c + 1
    return 2 * lo - n


def test_pmin_examples():
    assert [p_min(n) for n in (1, 6, 10, 22)] == [3, 6, 8, 12]
    with pytest.raises(ValueError):
        p_min(0)


@given(st.integers(1, 10**30))
def test_pmin_exact_against_reference(n):
    assert p_min(n) == pmin_reference(n)


def test_pmin_near_perfect_squares():
    # 6n a perfect square, and its neighbours
    for m in range(1, 2000):
        n = 6 * m * m
        for d in (-1, 0, 1):
            if n + d >= 1:
                assert p_min(n + d) == pmin_reference(n + d)


def test_pmin_float_agrees_for_small_n():
    for n in range(1, 5000):
        assert p_min(n) == 2 * math.ceil((n + math.sqrt(6 * n)) / 2) - n


def test_pmin_increment_examples():
    assert p_min(2) - p_min(1) == 1
    assert p_min(6) - p_min(5) == -1


def test_bmin():
    assert b_min(1) == 0
    assert b_min(5) == 4


def test_m_bound_examples():
    r = m_bound(19, 3)
    assert r.m_value == 3 and r.feasible
    r = m_bound(18, 3)
    assert r.m_value == Fraction(7, 3) and not r.feasible
    r = m_bound(1, 0)
    assert r.m_value == 0 and r.feasible
    assert r.as_row()["M"] == "0"


@given(st.integers(1, 10**6), st.integers(0, 10**4))
def test_m_bound_denominator(n, h):
    r = m_bound(n, h)
    assert 3 * r.m_value == n + 2 - p_min(n + h)
    assert 3 % r.m_value.denominator == 0
    assert r.p_min_at_n_plus_h == p_min(n + h)


@given(st.integers(1, 10**6), st.integers(0, 300))
def test_m_non_decreasing(n, h):
    assert m_bound(n + 1, h).m_value >= m_bound(n, h).m_value


def test_g_lower_bound_examples():
    assert g_lower_bound(1) == 9
    assert g_lower_bound(3) == 19
    assert g_lower_bound(9) == 43
    with pytest.raises(ValueError):
        g_lower_bound(0)


@given(st.integers(1, 2000))
def test_g_lower_bound_is_least(h):
    n = g_lower_bound(h)
    assert m_bound(n, h).feasible
    assert not m_bound(n - 1, h).feasible


def test_f_upper_bound_small():
    assert [f_upper_bound(n) for n in range(1, 10)] == [0] * 8 + [1]
    assert f_upper_bound(19) == 3


@given(st.integers(1, 500), st.integers(0, 50))
def test_budget_monotone_in_h(n, h):
    assert interior_edge_budget(n, h + 1) <= interior_edge_budget(n, h)


def test_verify_increments():
    assert verify_pmin_increments(10**6)
    with pytest.raises(ValueError):
        verify_pmin_increments(1)
