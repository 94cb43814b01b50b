"""JSON documents, SVG drawings and plain-text pictures of polyiamonds."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .lattice import is_up, vertices
from .polyiamond import Polyiamond, holes, make_polyiamond

_META_KEYS = ("name", "k", "provenance")


class MalformedDocument(ValueError):
    pass


def to_json(A: Polyiamond, **meta) -> str:
    """Compact JSON with sorted keys; cells are sorted ``[row, col]`` pairs.

    Extra keyword arguments ``name``, ``k`` and ``provenance`` are stored
    alongside the cells.
    """
    unknown = set(meta) - set(_META_KEYS)
    if unknown:
        raise TypeError(f"unknown metadata: {sorted(unknown)}")
    doc = {"cells": [list(c) for c in A.sorted_cells()]}
    doc.update({k: v for k, v in meta.items() if v is not None})
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def read_document(text: str) -> tuple[Polyiamond, dict]:
    """Parse a document into a validated shape plus its metadata."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or "cells" not in doc:
        raise MalformedDocument("expected an object with a 'cells' list")
    raw = doc["cells"]
    if not isinstance(raw, list):
        raise MalformedDocument("'cells' must be a list")
    cells = []
    for item in raw:
        if (not isinstance(item, list) or len(item) != 2
                or not all(type(v) is int for v in item)):
            raise MalformedDocument(f"bad cell entry {item!r}")
        cells.append((item[0], item[1]))
    if len(set(cells)) != len(cells):
        raise MalformedDocument("duplicate cells")
    meta = {k: doc[k] for k in _META_KEYS if k in doc}
    return make_polyiamond(cells), meta


def from_json(text: str) -> Polyiamond:
    return read_document(text)[0]


@dataclass(frozen=True)
class SvgOptions:
    side: float = 20.0
    margin: float = 10.0
    fill: str = "#4a7ab5"
    stroke: str = "#1d2f47"
    stroke_width: float = 0.8
    hole_style: str = "omit"  # omit | outline | shade
    hole_fill: str = "#f2c14e"


_ROW_H = math.sqrt(3) / 2


def _corners(c):
    # vertices() gives (row, 2x) pairs in units of one side
    return [(v[1] / 2, v[0] * _ROW_H) for v in vertices(c)]


def to_svg(A: Polyiamond, options: SvgOptions | None = None) -> str:
    """Draw every tile as an equilateral triangle; rows grow upward."""
    opt = options or SvgOptions()
    if opt.hole_style not in ("omit", "outline", "shade"):
        raise ValueError(f"unknown hole_style {opt.hole_style!r}")
    cells = A.sorted_cells()
    pts = [p for c in cells for p in _corners(c)]
    x0 = min(p[0] for p in pts)
    x1 = max(p[0] for p in pts)
    y0 = min(p[1] for p in pts)
    y1 = max(p[1] for p in pts)
    s, m = opt.side, opt.margin
    width = (x1 - x0) * s + 2 * m
    height = (y1 - y0) * s + 2 * m

    def poly(c):
        coords = " ".join(
            f"{(x - x0) * s + m:.6f},{(y1 - y) * s + m:.6f}" for x, y in _corners(c)
        )
        kind = "up" if is_up(c) else "down"
        return f'<polygon class="{kind}" points="{coords}"/>'

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.6f}" height="{height:.6f}" '
        f'viewBox="0 0 {width:.6f} {height:.6f}">',
        f'<g fill="{opt.fill}" stroke="{opt.stroke}" '
        f'stroke-width="{opt.stroke_width:.6f}" stroke-linejoin="round">',
    ]
    out += [poly(c) for c in cells]
    out.append("</g>")
    if opt.hole_style != "omit":
        hole_cells = sorted(c for h in holes(A).holes for c in h)
        fill = opt.hole_fill if opt.hole_style == "shade" else "none"
        out.append(f'<g class="holes" fill="{fill}" stroke="{opt.stroke}" '
                   f'stroke-width="{opt.stroke_width:.6f}" stroke-dasharray="2,2">')
        out += [poly(c) for c in hole_cells]
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_text_art(A: Polyiamond) -> str:
    """One character per cell, top row first: ``^`` up tile, ``v`` down tile,
    ``o`` hole, ``.`` outside."""
    hole_cells = {c for h in holes(A).holes for c in h}
    rows = [c[0] for c in A.cells]
    cols = [c[1] for c in A.cells]
    lines = []
    for r in range(max(rows), min(rows) - 1, -1):
        line = []
        for q in range(min(cols), max(cols) + 1):
            if (r, q) in A.cells:
                line.append("^" if is_up((r, q)) else "v")
            elif (r, q) in hole_cells:
                line.append("o")
            else:
                line.append(".")
        lines.append("".join(line).rstrip("."))
    return "\n".join(lines) + "\n"
