"""Polyominoes as normalized cell sets, convexity tests, maximal rectangles.

A cell is the unit square with lower-left corner (x, y); x grows rightward
and y upward.  Polyominoes are stored normalized (min x = min y = 0) and
every operation here is a pure function of the cell set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import Disconnected, EmptyInput, InternalInconsistency, NotLConvex

Cell = tuple[int, int]


@dataclass(frozen=True)
class MaximalRectangle:
    """A rectangular subpolyomino not contained in any larger one."""

    x: int
    y: int
    width: int
    height: int

    @property
    def size(self) -> tuple[int, int]:
        return (self.width, self.height)

    def cells(self):
        return [(self.x + i, self.y + j) for i in range(self.width) for j in range(self.height)]


@dataclass(frozen=True)
class Polyomino:
    """Finite edge-connected set of unit cells, normalized to the origin.

    Use :func:`from_cells` to construct; the constructor itself does not
    validate.  Instances are immutable and hashable.
    """

    cells: frozenset[Cell]

    @cached_property
    def bbox(self) -> tuple[int, int]:
        """(width, height) of the bounding box in cells."""
        return (1 + max(x for x, _ in self.cells), 1 + max(y for _, y in self.cells))

    @property
    def width(self) -> int:
        return self.bbox[0]

    @property
    def height(self) -> int:
        return self.bbox[1]

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """Bit grid over the bounding box: bit x of row_masks[y] is cell (x, y)."""
        masks = [0] * self.height
        for x, y in self.cells:
            masks[y] |= 1 << x
        return tuple(masks)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def __repr__(self) -> str:  # compact, deterministic
        m, n = self.bbox
        return f"Polyomino({len(self.cells)} cells, bbox {m}x{n})"


def from_cells(cells) -> Polyomino:
    """Build a polyomino from (x, y) pairs: dedupe, translate to the origin,
    and verify edge-connectedness.

    Raises EmptyInput or Disconnected (with a witness pair).
    """
    pts = {(int(x), int(y)) for x, y in cells}
    if not pts:
        raise EmptyInput("no cells given")
    x0 = min(x for x, _ in pts)
    y0 = min(y for _, y in pts)
    pts = {(x - x0, y - y0) for x, y in pts}
    start = next(iter(sorted(pts)))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in pts and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(pts):
        outside = min(pts - seen)
        raise Disconnected(start, outside)
    return Polyomino(frozenset(pts))


def is_row_convex(p: Polyomino) -> bool:
    """Every row of cells is a contiguous run."""
    for mask in p.row_masks:
        if mask and not _contiguous(mask):
            return False
    return True


def is_column_convex(p: Polyomino) -> bool:
    """Every column of cells is a contiguous run."""
    m, _ = p.bbox
    for x in range(m):
        col = 0
        for y, row in enumerate(p.row_masks):
            if row >> x & 1:
                col |= 1 << y
        if col and not _contiguous(col):
            return False
    return True


def _contiguous(mask: int) -> bool:
    low = (mask & -mask).bit_length() - 1
    run = mask >> low
    return (run & (run + 1)) == 0


def is_convex(p: Polyomino) -> bool:
    """Row-convex and column-convex simultaneously."""
    return is_row_convex(p) and is_column_convex(p)


def _segment_inside(p: Polyomino, a: Cell, b: Cell) -> bool:
    (x1, y1), (x2, y2) = a, b
    if x1 == x2:
        lo, hi = sorted((y1, y2))
        return all((x1, y) in p.cells for y in range(lo, hi + 1))
    if y1 == y2:
        lo, hi = sorted((x1, x2))
        return all((x, y1) in p.cells for x in range(lo, hi + 1))
    raise ValueError("cells are not aligned")


def is_l_convex(p: Polyomino) -> bool:
    """Convex, and every pair of cells is joined by a cell path with at most
    one change of direction (a straight run or an axis-aligned L through one
    of the two corner cells)."""
    if not is_convex(p):
        return False
    cells = p.sorted_cells()
    for i, a in enumerate(cells):
        for b in cells[i + 1:]:
            (x1, y1), (x2, y2) = a, b
            if x1 == x2 or y1 == y2:
                if not _segment_inside(p, a, b):
                    return False
                continue
            c1 = (x1, y2)
            c2 = (x2, y1)
            ok = (c1 in p.cells and _segment_inside(p, a, c1) and _segment_inside(p, c1, b)) or (
                c2 in p.cells and _segment_inside(p, a, c2) and _segment_inside(p, c2, b)
            )
            if not ok:
                return False
    return True


def _rect_inside(p: Polyomino, x: int, y: int, w: int, h: int) -> bool:
    mask = ((1 << w) - 1) << x
    return all(p.row_masks[yy] & mask == mask for yy in range(y, y + h))


def maximal_rectangles(p: Polyomino) -> list[MaximalRectangle]:
    """All maximal rectangular subpolyominoes, sorted by width ascending.

    Requires an L-convex input; its maximal rectangles have pairwise
    distinct widths, pairwise distinct heights, and one position per size,
    which is asserted.
    """
    if not is_l_convex(p):
        raise NotLConvex("maximal_rectangles needs an L-convex polyomino")
    m, n = p.bbox
    found: list[MaximalRectangle] = []
    for y in range(n):
        for x in range(m):
            if (x, y) not in p.cells:
                continue
            for w in range(1, m - x + 1):
                if not _rect_inside(p, x, y, w, 1):
                    break
                for h in range(1, n - y + 1):
                    if not _rect_inside(p, x, y, w, h):
                        break
                    if x > 0 and _rect_inside(p, x - 1, y, 1, h):
                        continue
                    if x + w < m and _rect_inside(p, x + w, y, 1, h):
                        continue
                    if y > 0 and _rect_inside(p, x, y - 1, w, 1):
                        continue
                    if y + h < n and _rect_inside(p, x, y + h, w, 1):
                        continue
                    found.append(MaximalRectangle(x, y, w, h))
    found.sort(key=lambda r: r.width)
    widths = [r.width for r in found]
    heights = [r.height for r in found]
    if len(set(widths)) != len(found) or len(set(heights)) != len(found):
        raise InternalInconsistency(f"maximal rectangle sizes collide: {found}")
    return found


def transpose(p: Polyomino) -> Polyomino:
    """Exchange the roles of rows and columns.

    Row i counted from the top becomes column i counted from the left, so
    the transposed polyomino's row projections equal the original column
    projections verbatim.  In cell coordinates this is the reflection
    (x, y) -> (n-1-y, m-1-x); it is an involution and preserves convexity
    and L-convexity.
    """
    m, n = p.bbox
    return Polyomino(frozenset((n - 1 - y, m - 1 - x) for x, y in p.cells))
