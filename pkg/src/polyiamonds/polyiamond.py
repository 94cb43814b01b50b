"""Polyiamond values and their topological invariants."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .lattice import apply_all, neighbors


class PolyiamondError(ValueError):
    pass


class EmptyShape(PolyiamondError):
    pass


class DisconnectedInterior(PolyiamondError):
    def __init__(self, components):
        self.components = [sorted(comp) for comp in components]
        sizes = ", ".join(str(len(c)) for c in self.components)
        super().__init__(f"dual graph has {len(self.components)} components (sizes {sizes})")


def _components(cells: frozenset) -> list[set]:
    seen: set = set()
    comps = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        todo = [start]
        while todo:
            c = todo.pop()
            for nb in neighbors(c):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    comp.add(nb)
                    todo.append(nb)
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class Polyiamond:
    """Finite edge-connected set of lattice triangles.

    Build through :func:`make_polyiamond`, which validates; the constructor
    itself trusts its input.
    """

    cells: frozenset

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def __contains__(self, c) -> bool:
        return (c[0], c[1]) in self.cells

    @property
    def n(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)


def make_polyiamond(cells) -> Polyiamond:
    cells = frozenset((int(c[0]), int(c[1])) for c in cells)
    if not cells:
        raise EmptyShape("a polyiamond needs at least one tile")
    comps = _components(cells)
    if len(comps) > 1:
        raise DisconnectedInterior(comps)
    return Polyiamond(cells)


def strip(n: int) -> Polyiamond:
    """``n`` tiles in a single row, starting with an up-triangle at the origin."""
    if n < 1:
        raise ValueError(f"strip length must be >= 1, got {n}")
    return Polyiamond(frozenset((0, q) for q in range(n)))


def interior_edges(A: Polyiamond) -> int:
    cells = A.cells
    shared = sum(1 for c in cells for nb in neighbors(c) if nb in cells)
    return shared // 2


def perimeter(A: Polyiamond) -> int:
    cells = A.cells
    return sum(1 for c in cells for nb in neighbors(c) if nb not in cells)


def dual_graph_is_tree(A: Polyiamond) -> bool:
    return interior_edges(A) == A.n - 1


@dataclass(frozen=True)
class HoleSummary:
    holes: tuple = field(repr=False)
    count: int
    total_area: int
    hole_perimeter: int
    outer_perimeter: int

    @property
    def areas(self) -> list[int]:
        return [len(h) for h in self.holes]

    @property
    def extra_area(self) -> int:
        """Area beyond one triangle per hole."""
        return self.total_area - self.count

    @property
    def extra_perimeter(self) -> int:
        """Hole perimeter beyond three edges per hole."""
        return self.hole_perimeter - 3 * self.count


def _complement_components(A: Polyiamond):
    """Bounded complement components, by flood fill inside a padded box."""
    cells = A.cells
    rows = [c[0] for c in cells]
    cols = [c[1] for c in cells]
    r0, r1 = min(rows) - 2, max(rows) + 2
    q0, q1 = min(cols) - 2, max(cols) + 2

    def inside(c):
        return r0 <= c[0] <= r1 and q0 <= c[1] <= q1

    outside = set()
    todo = deque()
    for r in range(r0, r1 + 1):
        for q in range(q0, q1 + 1):
            if r in (r0, r1) or q in (q0, q1):
                outside.add((r, q))
                todo.append((r, q))
    while todo:
        c = todo.popleft()
        for nb in neighbors(c):
            if nb not in outside and nb not in cells and inside(nb):
                outside.add(nb)
                todo.append(nb)

    holes = []
    seen = set()
    for r in range(r0 + 1, r1):
        for q in range(q0 + 1, q1):
            c = (r, q)
            if c in cells or c in outside or c in seen:
                continue
            comp = {c}
            seen.add(c)
            todo.append(c)
            while todo:
                x = todo.popleft()
                for nb in neighbors(x):
                    if nb not in cells and nb not in seen:
                        seen.add(nb)
                        comp.add(nb)
                        todo.append(nb)
            holes.append(frozenset(comp))
    return holes


def holes(A: Polyiamond) -> HoleSummary:
    found = _complement_components(A)
    cells = A.cells
    p_h = sum(1 for hole in found for c in hole for nb in neighbors(c) if nb in cells)
    return HoleSummary(
        holes=tuple(found),
        count=len(found),
        total_area=sum(len(h) for h in found),
        hole_perimeter=p_h,
        outer_perimeter=perimeter(A) - p_h,
    )


def fill_holes(A: Polyiamond) -> Polyiamond:
    found = _complement_components(A)
    if not found:
        return A
    return Polyiamond(A.cells.union(*found))


def normalize(cells) -> tuple:
    """Translate so the bounding box starts at row 0 and column 0 or 1.

    Only parity-preserving translations are used, so orientations survive.
    """
    r0 = min(c[0] for c in cells)
    q0 = min(c[1] for c in cells)
    q0 -= (r0 + q0) % 2
    return tuple(sorted((r - r0, q - q0) for r, q in cells))


def canonical_key(cells) -> tuple:
    """Least normalized cell sequence over the 12 isometric images."""
    cells = list(cells)
    return min(normalize(apply_all(i, cells)) for i in range(12))


def canonical_form(A: Polyiamond) -> Polyiamond:
    return Polyiamond(frozenset(canonical_key(A.cells)))
