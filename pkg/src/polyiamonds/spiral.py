"""The spiral polyiamonds Spir_k and their certificates.

Spir_k fills the hexagon Hex_k except for its two bottom-right corner tiles
and h_k single-triangle holes.  Spir_2 and Spir_3 are fixed seeds; Spir_k for
k >= 4 grows from Spir_{k-2} by wrapping two more layers around it.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from . import bounds
from .lattice import bottom_right_corner, bottom_row, hex_cells, is_up, layer_cells
from .polyiamond import (
    DisconnectedInterior,
    Polyiamond,
    dual_graph_is_tree,
    holes,
    make_polyiamond,
)


def _require(k: int) -> None:
    if k < 2:
        raise ValueError(f"spiral index must be >= 2, got {k}")


def seq_h(k: int) -> int:
    _require(k)
    return 3 * k * (k - 1) // 2


def seq_n(k: int) -> int:
    _require(k)
    return (9 * k * k + 3 * k - 4) // 2


def seq_diffs(k: int) -> tuple[int, int]:
    return seq_h(k + 1) - seq_h(k), seq_n(k + 1) - seq_n(k)


# Seeds, as cells removed from Hex_k besides the bottom-right corner pair.
# Spir_2 drops the three up-triangles around the centre.  Spir_3 keeps L_3
# intact and drops nine pairwise non-adjacent cells of Hex_2; this set is one
# of 124 such choices that give a tree with minimum outer perimeter.
SPIR2_HOLES = ((-1, 1), (0, 0), (0, 2))
SPIR3_HOLES = ((-2, 0), (-2, 2), (-1, -1), (-1, 3), (0, -2), (0, 0), (0, 4), (1, 0), (1, 3))


def _seed(k: int) -> set:
    cells = set(hex_cells(k)) - set(bottom_right_corner(k))
    cells -= set(SPIR2_HOLES if k == 2 else SPIR3_HOLES)
    return cells


def spiral_step(cells: set, k: int) -> set:
    """Turn the cell set of Spir_{k-2} into that of Spir_k (k >= 4), in place."""
    inner, mid = k - 2, k - 1
    cells.update(bottom_right_corner(inner))
    cells.update(c for c in layer_cells(mid) if not is_up(c))
    corner = set(bottom_right_corner(k))
    cells.update(c for c in layer_cells(k) if c not in corner)
    # move the penultimate up-triangle of L_{k-2}'s bottom row one row down, one column right
    ups_inner = [c for c in bottom_row(inner) if is_up(c)]
    ups_mid = [c for c in bottom_row(mid) if is_up(c)]
    vacated, target = ups_inner[-2], ups_mid[-2]
    assert target == (vacated[0] - 1, vacated[1] + 1)
    cells.discard(vacated)
    cells.add(target)
    return cells


def spir(k: int) -> Polyiamond:
    _require(k)
    base = 2 if k % 2 == 0 else 3
    cells = _seed(base)
    for j in range(base + 2, k + 1, 2):
        spiral_step(cells, j)
    try:
        return make_polyiamond(cells)
    except DisconnectedInterior as exc:
        raise RuntimeError(f"Spir_{k} construction came apart: {exc}") from exc


@dataclass(frozen=True)
class SpiralCertificate:
    k: int
    tiles: int
    holes: int
    all_holes_area_one: bool
    dual_tree: bool
    outer_perimeter: int
    p_min_of_filled: int

    @property
    def passes(self) -> bool:
        return (
            self.tiles == seq_n(self.k)
            and self.holes == seq_h(self.k)
            and self.all_holes_area_one
            and self.dual_tree
            and self.outer_perimeter == self.p_min_of_filled
        )

    def as_row(self) -> dict:
        row = asdict(self)
        row["passes"] = self.passes
        return row


def certify(k: int, shape: Polyiamond | None = None) -> SpiralCertificate:
    A = spir(k) if shape is None else shape
    summary = holes(A)
    return SpiralCertificate(
        k=k,
        tiles=A.n,
        holes=summary.count,
        all_holes_area_one=all(a == 1 for a in summary.areas),
        dual_tree=dual_graph_is_tree(A),
        outer_perimeter=summary.outer_perimeter,
        p_min_of_filled=bounds.p_min(seq_n(k) + seq_h(k)),
    )
