import random

import pytest
from hypothesis import given, settings

from polyiamonds import oracles
from polyiamonds.bounds import p_min
from polyiamonds.enumeration import enumerate_fixed
from polyiamonds.lattice import apply_all, hex_cells
from polyiamonds.polyiamond import (
    DisconnectedInterior, EmptyShape, Polyiamond, canonical_form, dual_graph_is_tree,
    fill_holes, holes, interior_edges, make_polyiamond, perimeter, strip,
)
from polyiamonds.spiral import spir

from .strategies import polyiamonds


def test_make_polyiamond_examples():
    assert make_polyiamond({(0, 0)}).n == 1
    assert make_polyiamond(hex_cells(2)).n == 24
    with pytest.raises(DisconnectedInterior) as exc:
        make_polyiamond({(0, 0), (0, 2)})
    assert len(exc.value.components) == 2
    with pytest.raises(EmptyShape):
        make_polyiamond(set())


def test_duplicates_collapse_to_a_set():
    assert make_polyiamond([(0, 0), (0, 0), (0, 1)]).n == 2


def test_perimeter_and_interior_examples():
    assert perimeter(strip(1)) == 3
    assert perimeter(strip(2)) == 4
    assert perimeter(make_polyiamond(hex_cells(1))) == 6 == p_min(6)
    assert interior_edges(strip(1)) == 0
    assert interior_edges(strip(5)) == 4
    assert perimeter(strip(4)) == 6
    H = make_polyiamond(hex_cells(2))
    assert (3 * 24 - perimeter(H)) % 2 == 0
    assert interior_edges(H) == (3 * 24 - perimeter(H)) // 2


def test_dual_tree_examples():
    assert dual_graph_is_tree(strip(7))
    assert not dual_graph_is_tree(make_polyiamond(hex_cells(1)))
    for k in (2, 3, 4):
        assert dual_graph_is_tree(spir(k))


def test_holes_examples():
    assert holes(make_polyiamond(hex_cells(1))).count == 0
    s = holes(spir(2))
    assert s.count == 3 and s.areas == [1, 1, 1]
    assert s.hole_perimeter == 9


def test_strip():
    assert strip(1).cells == frozenset({(0, 0)})
    with pytest.raises(ValueError):
        strip(0)
    for n in range(1, 101):
        A = strip(n)
        assert interior_edges(A) == n - 1
        assert holes(A).count == 0


def test_fill_holes_examples():
    A = strip(5)
    assert fill_holes(A) == A
    F = fill_holes(spir(2))
    assert F.n == 22 and holes(F).count == 0


def test_vertex_touching_holes_are_separate():
    # two single-cell holes that share only a corner are two components
    ring = hex_cells(2) - {(0, 0), (-1, 1)}
    A = make_polyiamond(ring)
    assert holes(A).count == 2 == oracles.euler_holes(ring)


@settings(max_examples=300, deadline=None)
@given(polyiamonds())
def test_identities(A):
    p, b = perimeter(A), interior_edges(A)
    s = holes(A)
    assert 3 * A.n == p + 2 * b
    assert p % 2 == (3 * A.n) % 2
    assert p == s.outer_perimeter + s.hole_perimeter
    assert s.count == len(s.holes)
    assert s.total_area == sum(s.areas) >= s.count
    assert s.hole_perimeter >= 3 * s.count
    assert s.extra_area >= 0 and s.extra_perimeter >= 0
    if s.count == 0:
        assert s.hole_perimeter == 0 and s.outer_perimeter == p


@settings(max_examples=150, deadline=None)
@given(polyiamonds(max_size=40))
def test_hole_count_matches_oracles(A):
    h = holes(A).count
    assert h == oracles.euler_holes(A.cells)
    assert h == oracles.hex_region_holes(A.cells)


@settings(max_examples=200, deadline=None)
@given(polyiamonds(max_size=40))
def test_fill_holes_properties(A):
    s = holes(A)
    F = fill_holes(A)
    assert holes(F).count == 0
    assert F.n == A.n + s.total_area
    assert perimeter(F) == s.outer_perimeter


@settings(max_examples=200, deadline=None)
@given(polyiamonds(max_size=20))
def test_canonical_form_on_orbits(A):
    key = canonical_form(A)
    assert canonical_form(key) == key
    for g in range(12):
        assert canonical_form(make_polyiamond(apply_all(g, A.cells))) == key


def test_canonical_form_separates_free_tetriamonds():
    keys = set()
    enumerate_fixed(4, lambda A: keys.add(canonical_form(A)))
    assert len(keys) == 3


def test_hole_oracle_on_all_small_shapes():
    for n in range(1, 10):
        for shape in oracles.naive_fixed(n):
            A = Polyiamond(shape)
            assert holes(A).count == oracles.hex_region_holes(shape)


def test_fill_holes_on_random_enumerated_shapes():
    shapes = []
    enumerate_fixed(11, shapes.append)
    rng = random.Random(3)
    sample = rng.sample(shapes, 100) + [A for A in shapes if holes(A).count][:20]
    for A in sample:
        assert perimeter(fill_holes(A)) == holes(A).outer_perimeter
