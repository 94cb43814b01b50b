"""Triangular lattice geometry.

A triangle is addressed by ``(row, col)``.  Rows increase upward and columns
increase rightward; consecutive columns in a row overlap by half a side, so
the centroid of ``(row, col)`` sits at ``x = col / 2``.  A triangle is an
up-triangle (horizontal edge at the base) iff ``row + col`` is even.

All isometries fix the lattice vertex at ``x = 1/2, y = 0``, which is also the
common centre of the benchmark hexagons ``Hex_k`` and layers ``L_k``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

UP = "up"
DOWN = "down"


class TriCoord(NamedTuple):
    row: int
    col: int


def is_up(c) -> bool:
    return (c[0] + c[1]) % 2 == 0


def orientation(c) -> str:
    return UP if is_up(c) else DOWN


def neighbors(c) -> list[tuple[int, int]]:
    r, q = c
    if (r + q) % 2 == 0:
        return [(r, q - 1), (r, q + 1), (r - 1, q)]
    return [(r, q - 1), (r, q + 1), (r + 1, q)]


def edge_id(a, b) -> tuple[tuple[int, int], tuple[int, int]]:
    """Canonical unordered key for the edge shared by neighbouring triangles."""
    a, b = (a[0], a[1]), (b[0], b[1])
    if b not in neighbors(a):
        raise ValueError(f"{a} and {b} do not share an edge")
    return (a, b) if a <= b else (b, a)


def vertices(c) -> tuple[tuple[int, int], ...]:
    """Corners of a triangle as ``(row, 2x)`` pairs; the sum is always odd."""
    r, q = c
    if (r + q) % 2 == 0:
        return ((r, q - 1), (r, q + 1), (r + 1, q))
    return ((r + 1, q - 1), (r + 1, q + 1), (r, q))


# Centroids relative to the origin vertex, written as 3*(a + b*w) with
# w = exp(i*pi/3).  Integer coordinates make the symmetries exact.

def to_eisenstein(c) -> tuple[int, int]:
    r, q = c
    if (r + q) % 2 == 0:
        return (3 * (q - r - 1) - 1) // 2, 3 * r + 1
    return (3 * (q - r - 1) - 2) // 2, 3 * r + 2


def from_eisenstein(a: int, b: int) -> tuple[int, int]:
    m = b % 3
    if m == 1:
        r = (b - 1) // 3
        return r, (2 * a + 1) // 3 + r + 1
    if m == 2:
        r = (b - 2) // 3
        return r, (2 * a + 2) // 3 + r + 1
    raise ValueError(f"({a}, {b}) is not a triangle centroid")


def _mul(m1, m2):
    (a, b), (c, d) = m1
    (e, f), (g, h) = m2
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


# Column-vector maps on (a, b).  ROTATE is multiplication by w; REFLECT is
# complex conjugation (mirror in the horizontal line through the origin).
_IDENTITY = ((1, 0), (0, 1))
_ROTATE = ((0, -1), (1, 1))
_REFLECT = ((1, 1), (0, -1))


@lru_cache(maxsize=None)
def _matrices() -> tuple:
    mats = []
    for flip in (0, 1):
        base = _REFLECT if flip else _IDENTITY
        m = base
        for _ in range(6):
            mats.append(m)
            m = _mul(_ROTATE, m)
    return tuple(mats)


class Isometry(NamedTuple):
    """One of the 12 symmetries fixing the origin vertex.

    ``index = rotation + 6 * reflected``: first reflect (if requested), then
    rotate counter-clockwise by ``rotation * 60`` degrees.
    """

    index: int

    @property
    def rotation(self) -> int:
        return self.index % 6

    @property
    def reflected(self) -> bool:
        return self.index >= 6

    @property
    def matrix(self):
        return _matrices()[self.index]

    def __call__(self, c) -> tuple[int, int]:
        return apply(self, c)

    def compose(self, other: "Isometry") -> "Isometry":
        """``self`` after ``other``."""
        return _index_of(_mul(self.matrix, other.matrix))

    def inverse(self) -> "Isometry":
        for g in ISOMETRIES:
            if self.compose(g).index == 0:
                return g
        raise AssertionError("group not closed")


def _index_of(m) -> Isometry:
    return Isometry(_matrices().index(m))


ISOMETRIES = tuple(Isometry(i) for i in range(12))
IDENTITY = ISOMETRIES[0]


def apply(iso, c) -> tuple[int, int]:
    (p, q), (s, t) = _matrices()[int(iso if isinstance(iso, int) else iso.index)]
    a, b = to_eisenstein(c)
    return from_eisenstein(p * a + q * b, s * a + t * b)


def apply_all(iso, cells: Iterable) -> list[tuple[int, int]]:
    (p, q), (s, t) = _matrices()[int(iso if isinstance(iso, int) else iso.index)]
    out = []
    for c in cells:
        a, b = to_eisenstein(c)
        out.append(from_eisenstein(p * a + q * b, s * a + t * b))
    return out


def hex_radius(c) -> int:
    """Smallest k with ``c`` inside ``Hex_k``."""
    a, b = to_eisenstein(c)
    m = max(abs(a), abs(b), abs(a + b))
    return m // 3 + 1


def _require_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"hexagon side must be >= 1, got {k}")


@lru_cache(maxsize=64)
def _hex(k: int) -> frozenset:
    cells = set()
    for r in range(-k, k):
        for q in range(1 - 2 * k, 2 * k + 2):
            if hex_radius((r, q)) <= k:
                cells.add((r, q))
    return frozenset(cells)


def hex_cells(k: int) -> frozenset:
    """Triangles of the regular hexagon of side ``k`` centred at the origin."""
    _require_k(k)
    return _hex(k)


def layer_cells(k: int) -> frozenset:
    """The ``k``-th concentric layer ``Hex_k`` minus ``Hex_{k-1}``."""
    _require_k(k)
    if k == 1:
        return _hex(1)
    return _hex(k) - _hex(k - 1)


def bottom_row(k: int) -> list[tuple[int, int]]:
    """Cells of the lowest row of ``L_k``, ordered left to right."""
    _require_k(k)
    return sorted(c for c in _hex(k) if c[0] == -k)


def bottom_right_corner(k: int) -> list[tuple[int, int]]:
    """The two cells of ``L_k`` with maximal column in its lowest row."""
    return bottom_row(k)[-2:]
