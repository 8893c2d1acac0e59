"""Row/column projections, the staircase projection, and reconstruction.

Convention used throughout this module: the horizontal projection H lists
cells per row numbered top to bottom, the vertical projection V cells per
column left to right.  (The poset module numbers rows bottom to top; each
module states its own convention.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguousRealization, InternalInconsistency, NoRealization, NotLConvex
from .geometry import Polyomino, from_cells, is_l_convex


@dataclass(frozen=True)
class ProjectionPair:
    """Per-row and per-column cell counts of a polyomino."""

    h: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if not self.h or not self.v:
            raise ValueError("projections must be nonempty")
        if min(self.h) < 1 or min(self.v) < 1:
            raise ValueError("projections must be positive")
        if sum(self.h) != sum(self.v):
            raise ValueError("row and column projections must have equal sums")


def is_unimodal(vec) -> bool:
    """Weakly increases to a peak, then weakly decreases."""
    rising = True
    for prev, cur in zip(vec, vec[1:]):
        if rising and cur < prev:
            rising = False
        elif not rising and cur > prev:
            return False
    return True


def projections(p: Polyomino) -> ProjectionPair:
    """H[i] = cells in row i from the top, V[j] = cells in column j from the left."""
    m, n = p.bbox
    h = tuple(p.row_masks[n - 1 - i].bit_count() for i in range(n))
    v = [0] * m
    for x, _ in p.cells:
        v[x] += 1
    return ProjectionPair(h, tuple(v))


def ferrer_from_rows(widths) -> Polyomino:
    """The staircase polyomino with the given top-to-bottom row widths
    (weakly decreasing, left-justified, widest row on top)."""
    widths = tuple(int(w) for w in widths)
    if any(a < b for a, b in zip(widths, widths[1:])):
        raise ValueError("row widths must be weakly decreasing")
    n = len(widths)
    return Polyomino(frozenset((x, n - 1 - i) for i, w in enumerate(widths) for x in range(w)))


def is_ferrer(p: Polyomino) -> bool:
    """True iff the cell incidence pattern is a staircase: whenever (x, y)
    is a cell, so are its left neighbor and upper neighbor inside the box.

    Equivalently the bipartite cell graph with natural labels satisfies the
    staircase (Ferrer graph) edge condition.
    """
    _, n = p.bbox
    for x, y in p.cells:
        if x > 0 and (x - 1, y) not in p.cells:
            return False
        if y < n - 1 and (x, y + 1) not in p.cells:
            return False
    return True


def ferrer_project(p: Polyomino) -> Polyomino:
    """The unique staircase polyomino whose projections are the descending
    sorts of this one's.  Requires an L-convex input."""
    if not is_l_convex(p):
        raise NotLConvex("ferrer projection needs an L-convex polyomino")
    pp = projections(p)
    star = ferrer_from_rows(sorted(pp.h, reverse=True))
    got = projections(star)
    if got.v != tuple(sorted(pp.v, reverse=True)):
        raise InternalInconsistency(
            f"staircase projection changed the column multiset: {got.v} vs {sorted(pp.v, reverse=True)}"
        )
    return star


def reconstruct_l_convex(pp: ProjectionPair) -> Polyomino:
    """The unique L-convex polyomino with the given projections.

    Searches row offsets top to bottom under running column-count and
    column-contiguity pruning, then filters by the L-convexity test.  The
    search is exhaustive over the pruned space so that a second solution
    (impossible for valid input) is detected and reported.
    """
    h, v = pp.h, pp.v
    n, m = len(h), len(v)
    if max(h) > m or max(v) > n:
        raise NoRealization(f"projections H={h} V={v} admit no L-convex polyomino")
    solutions: list[Polyomino] = []
    colsum = [0] * m
    offsets: list[int] = []

    def place(i: int) -> None:
        if i == n:
            if colsum != list(v):
                return
            cells = [
                (off + dx, n - 1 - row)
                for row, off in enumerate(offsets)
                for dx in range(h[row])
            ]
            cand = from_cells(cells)
            if is_l_convex(cand):
                solutions.append(cand)
            return
        width = h[i]
        remaining = n - i - 1
        for off in range(0, m - width + 1):
            ok = True
            for j in range(m):
                covered = off <= j < off + width
                new = colsum[j] + (1 if covered else 0)
                if new > v[j]:
                    ok = False
                    break
                # a started, currently uncovered column can never resume
                if not covered and 0 < colsum[j] < v[j]:
                    ok = False
                    break
                if new + remaining < v[j]:
                    ok = False
                    break
            if not ok:
                continue
            if offsets:
                prev_off = offsets[-1]
                prev_w = h[i - 1]
                if off + width <= prev_off or off >= prev_off + prev_w:
                    continue  # consecutive rows must share a column
            for j in range(off, off + width):
                colsum[j] += 1
            offsets.append(off)
            place(i + 1)
            offsets.pop()
            for j in range(off, off + width):
                colsum[j] -= 1

    place(0)
    if not solutions:
        raise NoRealization(f"projections H={h} V={v} admit no L-convex polyomino")
    if len(solutions) > 1:
        raise AmbiguousRealization(
            f"projections H={h} V={v} admit {len(solutions)} L-convex polyominoes"
        )
    return solutions[0]
