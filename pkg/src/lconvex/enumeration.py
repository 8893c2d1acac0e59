"""Exhaustive catalogs of small staircase and L-convex polyominoes.

Both generators are deterministic and duplicate-free up to translation;
they feed the verification harness, so they stay deliberately simple and
are cross-checked in the tests by independent routes.
"""

from __future__ import annotations

from typing import Iterator

from .errors import BoundTooLarge
from .geometry import Polyomino, from_cells, is_l_convex
from .projections import ferrer_from_rows

MAX_FERRER_BOUND = 8
MAX_LCONVEX_BOUND = 6


def enumerate_ferrer(max_m: int, max_n: int) -> Iterator[Polyomino]:
    """All staircase polyominoes with at most max_n rows of width at most
    max_m (the nonempty partitions in a max_m x max_n box), in descending
    lexicographic order of the width vector."""
    if max_m > MAX_FERRER_BOUND or max_n > MAX_FERRER_BOUND:
        raise BoundTooLarge(f"staircase bounds capped at {MAX_FERRER_BOUND}")
    if max_m < 1 or max_n < 1:
        raise BoundTooLarge("bounds must be positive")

    def widths(prefix: list[int], largest: int) -> Iterator[tuple[int, ...]]:
        for w in range(min(largest, max_m), 0, -1):
            cur = prefix + [w]
            yield tuple(cur)
            if len(cur) < max_n:
                yield from widths(cur, w)

    for vec in widths([], max_m):
        yield ferrer_from_rows(vec)


def enumerate_l_convex(max_m: int, max_n: int, exact: bool = False) -> Iterator[Polyomino]:
    """All L-convex polyominoes with bounding box within (max_m, max_n);
    with exact=True only those whose box is exactly (max_m, max_n).

    Rows are generated bottom-to-top as (offset, width) pairs with
    row-overlap pruning, then filtered through the L-convexity test.
    """
    if max_m > MAX_LCONVEX_BOUND or max_n > MAX_LCONVEX_BOUND:
        raise BoundTooLarge(f"L-convex enumeration bounds capped at {MAX_LCONVEX_BOUND}")
    if max_m < 1 or max_n < 1:
        raise BoundTooLarge("bounds must be positive")
    boxes = (
        [(max_m, max_n)]
        if exact
        else [(m, n) for n in range(1, max_n + 1) for m in range(1, max_m + 1)]
    )
    for m, n in boxes:
        yield from _l_convex_with_box(m, n)


def _l_convex_with_box(m: int, n: int) -> Iterator[Polyomino]:
    rows: list[tuple[int, int]] = []
    results: list[Polyomino] = []

    def place(y: int) -> None:
        if y == n:
            if max(o + w for o, w in rows) - min(o for o, _ in rows) < m:
                return  # box narrower than m; counted in a smaller box
            cells = [(o + dx, yy) for yy, (o, w) in enumerate(rows) for dx in range(w)]
            cand = from_cells(cells)
            if cand.bbox == (m, n) and is_l_convex(cand):
                results.append(cand)
            return
        for w in range(1, m + 1):
            for o in range(0, m - w + 1):
                if rows:
                    po, pw = rows[-1]
                    if o + w <= po or o >= po + pw:
                        continue  # consecutive rows must share a column
                rows.append((o, w))
                place(y + 1)
                rows.pop()

    place(0)
    seen = set()
    for p in sorted(results, key=lambda q: q.sorted_cells()):
        if p.cells not in seen:
            seen.add(p.cells)
            yield p
