import pytest

from polyiamonds.bounds import m_bound, p_min
from polyiamonds.lattice import hex_cells, hex_radius, is_up
from polyiamonds.polyiamond import fill_holes, holes, interior_edges
from polyiamonds.spiral import certify, seq_diffs, seq_h, seq_n, spir


def test_sequences():
    assert (seq_h(2), seq_n(2)) == (3, 19)
    assert (seq_h(3), seq_n(3)) == (9, 43)
    assert (seq_h(15), seq_n(15)) == (315, 1033)
    for fn in (seq_h, seq_n, seq_diffs):
        with pytest.raises(ValueError):
            fn(1)


def test_diffs():
    assert seq_diffs(2) == (6, 24)
    assert seq_diffs(3) == (9, 33)
    for k in range(2, 200):
        assert seq_diffs(k) == (3 * k, 9 * k + 6)
        assert seq_n(k) + seq_h(k) == 6 * k * k - 2
    dh = sum(seq_diffs(k)[0] for k in range(2, 10))
    dn = sum(seq_diffs(k)[1] for k in range(2, 10))
    assert (seq_h(2) + dh, seq_n(2) + dn) == (seq_h(10), seq_n(10))


def test_spir_rejects_small_k():
    with pytest.raises(ValueError):
        spir(1)


@pytest.mark.parametrize("k", range(2, 21))
def test_spir_shape(k):
    A = spir(k)
    H = hex_cells(k)
    assert A.cells <= H
    assert len(H) - A.n == seq_h(k) + 2
    s = holes(A)
    assert A.n == seq_n(k) and s.count == seq_h(k)
    assert interior_edges(A) == seq_n(k) - 1
    assert fill_holes(A).n == 6 * k * k - 2
    if k >= 4:
        assert s.count == holes(spir(k - 2)).count + 6 * k - 9
        # holes outside the base configuration are single up-triangles
        base = 2 if k % 2 == 0 else 3
        for h in s.holes:
            if any(hex_radius(c) > base for c in h):
                (c,) = h
                assert is_up(c)


def test_spir_values():
    assert (spir(2).n, holes(spir(2)).count) == (19, 3)
    A = spir(4)
    assert (A.n, holes(A).count) == (76, 18)


def test_certificates():
    c2 = certify(2)
    assert c2.passes and c2.p_min_of_filled == p_min(22)
    c7 = certify(7)
    assert c7.passes and c7.outer_perimeter == p_min(6 * 49 - 2) == 42
    c15 = certify(15)
    assert c15.passes and (c15.tiles, c15.holes) == (1033, 315)
    assert c15.as_row()["passes"] is True


def test_certificate_detects_a_broken_shape():
    from polyiamonds.polyiamond import make_polyiamond
    A = spir(3)
    (plug,) = holes(A).holes[0]
    cert = certify(3, make_polyiamond(A.cells | {plug}))
    assert not cert.passes and cert.holes == 8


def test_bound_is_tight_along_the_sequence():
    for k in range(2, 1001):
        n, h = seq_n(k), seq_h(k)
        assert m_bound(n, h).m_value == h
        assert m_bound(n - 1, h).m_value < h
