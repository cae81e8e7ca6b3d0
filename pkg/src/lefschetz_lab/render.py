"""Deterministic SVG and ASCII pictures of triangular regions and tilings.

This is the only module that touches plane geometry; everything else works on
labels.  The emitted SVG is byte-identical for identical inputs: coordinates
come from the same closed-form expressions every run and are printed with a
fixed format.

Conventions: 50 px per lattice edge, row height sqrt(3)/2 edges, y axis
flipped for screen.  Removed cells (the punctures) are shaded dark gray,
lozenges of a tiling are fused light-gray rhombi over their two triangles.
"""

from __future__ import annotations

import math
from typing import Iterable

from .ideals import Monomial, monomials_of_degree
from .regions import TriangularRegion
from .tilings import Tiling

UNIT_PX = 50.0
ROW_H = math.sqrt(3.0) / 2.0

DARK = "#555555"
LIGHT = "#d9d9d9"
EDGE = "#333333"


def _up_corners(m: Monomial) -> tuple[tuple[float, float], ...]:
    a, c = m.ex, m.ez
    return (
        (c + a / 2.0, a * ROW_H),
        (c + a / 2.0 + 1.0, a * ROW_H),
        (c + a / 2.0 + 0.5, (a + 1) * ROW_H),
    )


def _down_corners(n: Monomial) -> tuple[tuple[float, float], ...]:
    p, r = n.ex, n.ez
    return (
        (r + (p + 1) / 2.0, (p + 1) * ROW_H),
        (r + (p + 1) / 2.0 + 1.0, (p + 1) * ROW_H),
        (r + p / 2.0 + 1.0, p * ROW_H),
    )


def _polygon(points: Iterable[tuple[float, float]], d: int, fill: str) -> str:
    coords = " ".join(
        f"{x * UNIT_PX:.2f},{(d * ROW_H - y) * UNIT_PX:.2f}" for x, y in points
    )
    return f'<polygon points="{coords}" fill="{fill}" stroke="{EDGE}" stroke-width="1"/>'


def _rhombus(down: Monomial, up: Monomial) -> tuple[tuple[float, float], ...]:
    ups = _up_corners(up)
    downs = _down_corners(down)
    shared = [p for p in ups if p in downs]
    apex_up = next(p for p in ups if p not in shared)
    apex_down = next(p for p in downs if p not in shared)
    return (apex_up, shared[0], apex_down, shared[1])


def render_svg_text(region: TriangularRegion, tiling: Tiling | None = None) -> str:
    """The SVG document as a string; ``render_svg`` writes it to a file."""
    d = region.d
    width = d * UNIT_PX
    height = d * ROW_H * UNIT_PX
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">',
    ]
    up_set, down_set = region.up_set, region.down_set
    for m in monomials_of_degree(d - 1):
        parts.append(_polygon(_up_corners(m), d, "#ffffff" if m in up_set else DARK))
    for n in monomials_of_degree(d - 2):
        parts.append(_polygon(_down_corners(n), d, "#ffffff" if n in down_set else DARK))
    if tiling is not None:
        for down, up in tiling.pairs:
            parts.append(_polygon(_rhombus(down, up), d, LIGHT))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_svg(region: TriangularRegion, tiling: Tiling | None, path: str) -> str:
    text = render_svg_text(region, tiling)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


def render_ascii(region: TriangularRegion) -> str:
    """Text picture, top row first: '^'/'v' for present cells, '#' for removed."""
    d = region.d
    lines = []
    for a in range(d - 1, -1, -1):
        cells = []
        for c in range(d - a):
            up = Monomial(a, d - 1 - a - c, c)
            cells.append("^" if up in region.up_set else "#")
            if c < d - 1 - a:
                down = Monomial(a, d - 2 - a - c, c)
                cells.append("v" if down in region.down_set else "#")
        lines.append(" " * a + "".join(cells))
    return "\n".join(lines)
