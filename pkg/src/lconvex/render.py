"""Text and SVG drawings of polyominoes."""

from __future__ import annotations

from .errors import UnknownStyle
from .geometry import Polyomino

SVG_CELL = 20
SVG_MARGIN = 4


def render(p: Polyomino, style: str = "ascii") -> str:
    if style == "ascii":
        return ascii_art(p)
    if style == "svg":
        return svg(p)
    raise UnknownStyle(f"unknown style: {style}")


def ascii_art(p: Polyomino) -> str:
    """Rows top to bottom, '#' per cell, right-trimmed."""
    m, n = p.bbox
    lines = []
    for y in range(n - 1, -1, -1):
        row = "".join("#" if (x, y) in p.cells else " " for x in range(m))
        lines.append(row.rstrip())
    return "\n".join(lines)


def svg(p: Polyomino) -> str:
    """SVG 1.1 document: one unit square per cell plus the bounding box."""
    m, n = p.bbox
    width = m * SVG_CELL + 2 * SVG_MARGIN
    height = n * SVG_CELL + 2 * SVG_MARGIN
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="{SVG_MARGIN}" y="{SVG_MARGIN}" width="{m * SVG_CELL}" '
        f'height="{n * SVG_CELL}" fill="none" stroke="#999" stroke-dasharray="3 3"/>',
    ]
    for x, y in sorted(p.cells):
        px = SVG_MARGIN + x * SVG_CELL
        py = SVG_MARGIN + (n - 1 - y) * SVG_CELL
        parts.append(
            f'<rect x="{px}" y="{py}" width="{SVG_CELL}" height="{SVG_CELL}" '
            f'fill="#b3c6e7" stroke="#333"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
