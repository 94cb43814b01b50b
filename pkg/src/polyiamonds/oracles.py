"""Slow, independent reference computations used to cross-check the fast paths.

Nothing here shares code with the enumeration kernel, the flood fill in
:mod:`polyiamonds.polyiamond`, or the integer isometries of
:mod:`polyiamonds.lattice`.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .lattice import hex_cells


def _nbrs(c):
    r, q = c
    third = (r - 1, q) if (r + q) % 2 == 0 else (r + 1, q)
    return [(r, q - 1), (r, q + 1), third]


def _translate_to_anchor(cells):
    """Move the least cell to (0, 0) or (0, 1), keeping orientations."""
    r0, q0 = min(cells)
    dq = -q0 + ((r0 + q0) % 2)
    return frozenset((r - r0, q + dq) for r, q in cells)


def naive_fixed(n: int) -> set:
    """All fixed n-cell polyiamonds by growing every shape one cell at a time."""
    level = {_translate_to_anchor([(0, 0)]), _translate_to_anchor([(0, 1)])}
    for _ in range(n - 1):
        nxt = set()
        for shape in level:
            for c in shape:
                for nb in _nbrs(c):
                    if nb not in shape:
                        nxt.add(_translate_to_anchor(shape | {nb}))
        level = nxt
    return level


_H = math.sqrt(3) / 2


def _centroid(c):
    r, q = c
    up = (r + q) % 2 == 0
    return q / 2, r * _H + (_H / 3 if up else 2 * _H / 3)


def geometric_key(cells) -> tuple:
    """Isometry class key computed from floating-point centroids."""
    pts = [_centroid(c) for c in cells]
    best = None
    for k in range(6):
        ang = k * math.pi / 3
        ca, sa = math.cos(ang), math.sin(ang)
        for mirror in (1, -1):
            img = [(ca * x - sa * mirror * y, sa * x + ca * mirror * y) for x, y in pts]
            y0 = min(y for _, y in img)
            x0 = min(x for x, _ in img)
            key = tuple(sorted((round(x - x0, 6) + 0.0, round(y - y0, 6) + 0.0) for x, y in img))
            if best is None or key < best:
                best = key
    return best


def naive_free_count(n: int) -> int:
    return len({geometric_key(s) for s in naive_fixed(n)})


def hex_region_holes(cells) -> int:
    """Bounded complement components, via union-find inside a large hexagon.

    The shape is shifted next to the origin and the complement is taken inside
    Hex_R; every component meeting the outer layer of Hex_R is glued to a
    single exterior node.
    """
    cells = list(cells)
    n = len(cells)
    shape = _translate_to_anchor(cells)
    region, outer = _region(n + 2)
    assert shape <= region
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    EXTERIOR = "exterior"
    parent[EXTERIOR] = EXTERIOR
    free = [c for c in region if c not in shape]
    for c in free:
        parent[c] = c
    for c in free:
        if c in outer:
            union(c, EXTERIOR)
        for nb in _nbrs(c):
            if nb in parent and nb != EXTERIOR:
                union(c, nb)
    roots = {find(c) for c in free}
    roots.discard(find(EXTERIOR))
    return len(roots)


@lru_cache(maxsize=None)
def _region(R):
    region = hex_cells(R)
    outer = frozenset(c for c in region if not all(nb in region for nb in _nbrs(c)))
    return region, outer


def euler_holes(cells) -> int:
    """First Betti number of the closed shape: 1 - (V - E + F)."""
    cells = set(cells)
    verts = set()
    edges = set()
    for r, q in cells:
        if (r + q) % 2 == 0:
            vs = [(r, q - 1), (r, q + 1), (r + 1, q)]
        else:
            vs = [(r + 1, q - 1), (r + 1, q + 1), (r, q)]
        verts.update(vs)
        for i in range(3):
            edges.add(frozenset((vs[i], vs[(i + 1) % 3])))
    return 1 - (len(verts) - len(edges) + len(cells))


def brute_pmin(n: int) -> int:
    """Minimum perimeter over :func:`naive_fixed` shapes."""
    best = None
    for shape in naive_fixed(n):
        p = sum(1 for c in shape for nb in _nbrs(c) if nb not in shape)
        best = p if best is None else min(best, p)
    return best
