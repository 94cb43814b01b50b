"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
from fractions import Fraction

from polyiamonds import verify
from polyiamonds.bounds import g_lower_bound, m_bound, p_min
from polyiamonds.spiral import seq_h, seq_n


def _check(report, number, res):
    report(f"criterion {number} ({res.name})", res.passed, res.detail)
    assert res.passed, res.detail


def test_criterion_1_formula(report):
    # p_min vs exhaustive minima for n <= 10, unit increments for n <= 10^6
    _check(report, 1, verify.check_formula(n_enum=10, n_increments=10**6))


def test_criterion_2_identities(report):
    # 3n = p + 2b and p = p_out + p_h, zero tolerance
    _check(report, 2, verify.check_identities(ncap=12, kmax=30))


def test_criterion_3_bound(report):
    # hole bound over n <= 12; M monotone for n <= 10^5, h <= 100
    _check(report, 3, verify.check_bound(ncap=12, n_mono=10**5, h_mono=100))


def test_criterion_4_spiral_bounds(report):
    res = verify.check_spiral_bounds(kmax=1000)
    k = 1000
    assert m_bound(seq_n(k), seq_h(k)).m_value == Fraction(seq_h(k))
    assert g_lower_bound(seq_h(k)) == seq_n(k)
    _check(report, 4, res)


def test_criterion_5_certificates(report):
    res = verify.check_certificates(kmax=50)
    assert p_min(6 * 15 * 15 - 2) == 90
    _check(report, 5, res)


def test_criterion_6_ground_truth(report):
    _check(report, 6, verify.check_ground_truth(jobs=1))


def test_criterion_7_determinism(report):
    _check(report, 7, verify.check_determinism(n=10))
