"""Derived sequences and the Gorenstein / punctured-spectrum classification.

Removing the unique full-width maximal rectangle from an L-convex polyomino
leaves an L-convex polyomino (or nothing, for a rectangle); iterating gives
the derived sequence.  Gorensteinness is equivalent to every member having
a square bounding box, and two further numeric criteria on the projection
value multiplicities; all three are evaluated and must agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InternalInconsistency, NotLConvex
from .geometry import Polyomino, from_cells, is_l_convex
from .poset import component_purity, join_irreducible_poset
from .projections import ferrer_project, projections


def remove_max_width_rectangle(p: Polyomino) -> Polyomino | None:
    """Delete the rows of full width (a contiguous block, by unimodality)
    and glue the remaining parts; None if p is a rectangle.

    The result is L-convex, which is asserted.
    """
    if not is_l_convex(p):
        raise NotLConvex("derived step needs an L-convex polyomino")
    m, n = p.bbox
    full = (1 << m) - 1
    full_rows = [y for y in range(n) if p.row_masks[y] == full]
    if not full_rows:
        raise InternalInconsistency("an L-convex polyomino must have a full-width row")
    if full_rows != list(range(full_rows[0], full_rows[-1] + 1)):
        raise InternalInconsistency(f"full-width rows not contiguous: {full_rows}")
    if len(full_rows) == n:
        return None
    lo, hi = full_rows[0], full_rows[-1]
    d = hi - lo + 1
    cells = []
    for x, y in p.cells:
        if y < lo:
            cells.append((x, y))
        elif y > hi:
            cells.append((x, y - d))
    result = from_cells(cells)
    if not is_l_convex(result):
        raise InternalInconsistency("derived polyomino is not L-convex")
    return result


def derived_sequence(p: Polyomino) -> list[Polyomino]:
    """[p = p_0, p_1, ..., p_t] with p_t a rectangle and nothing after."""
    if not is_l_convex(p):
        raise NotLConvex("derived sequence needs an L-convex polyomino")
    seq = [p]
    while True:
        nxt = remove_max_width_rectangle(seq[-1])
        if nxt is None:
            return seq
        seq.append(nxt)


def is_rectangle(p: Polyomino) -> bool:
    m, n = p.bbox
    return len(p.cells) == m * n


def is_gorenstein(p: Polyomino) -> bool:
    """True iff every member of the derived sequence has a square bounding box."""
    return all(q.width == q.height for q in derived_sequence(p))


@dataclass(frozen=True)
class NumericGorensteinReport:
    """Evaluation of the two multiplicity criteria on distinct projection values.

    Rows: with distinct row counts g_1 < ... < g_r of multiplicities a_i,
    the criterion demands g_l = a_1 + ... + a_l for every l; columns
    likewise.  Both agree with the square-boxes test, which is asserted.
    """

    row_criterion: bool
    column_criterion: bool
    row_values: tuple[tuple[int, int], ...]  # (distinct value, multiplicity)
    column_values: tuple[tuple[int, int], ...]

    @property
    def verdict(self) -> bool:
        return self.row_criterion


def _cumulative_criterion(vec) -> tuple[bool, tuple[tuple[int, int], ...]]:
    distinct = sorted(set(vec))
    mults = [(g, sum(1 for x in vec if x == g)) for g in distinct]
    running = 0
    ok = True
    for g, a in mults:
        running += a
        if g != running:
            ok = False
    return ok, tuple(mults)


def gorenstein_numeric(p: Polyomino) -> NumericGorensteinReport:
    if not is_l_convex(p):
        raise NotLConvex("numeric criteria need an L-convex polyomino")
    pp = projections(p)
    row_ok, row_vals = _cumulative_criterion(pp.h)
    col_ok, col_vals = _cumulative_criterion(pp.v)
    boxes = is_gorenstein(p)
    if not (row_ok == col_ok == boxes):
        raise InternalInconsistency(
            f"gorenstein criteria disagree: boxes={boxes} rows={row_ok} cols={col_ok}"
        )
    return NumericGorensteinReport(row_ok, col_ok, row_vals, col_vals)


class SpectrumClass(enum.Enum):
    GORENSTEIN = "Gorenstein"
    GORENSTEIN_ON_PUNCTURED_SPECTRUM = "GorensteinOnPuncturedSpectrum"
    NEITHER = "Neither"


def punctured_spectrum_class(p: Polyomino) -> SpectrumClass:
    """Gorenstein / Gorenstein-only-away-from-the-origin / neither.

    Primary test: Gorenstein iff square boxes; otherwise Gorenstein on the
    punctured spectrum iff the staircase projection is a non-square
    rectangle.  The poset criterion (every connected component of the
    join-irreducible poset is pure) is evaluated independently and must
    agree.
    """
    if not is_l_convex(p):
        raise NotLConvex("classification needs an L-convex polyomino")
    star = ferrer_project(p)
    if is_gorenstein(p):
        primary = SpectrumClass.GORENSTEIN
    elif is_rectangle(star) and star.width != star.height:
        primary = SpectrumClass.GORENSTEIN_ON_PUNCTURED_SPECTRUM
    else:
        primary = SpectrumClass.NEITHER
    components = component_purity(join_irreducible_poset(star))
    all_pure = all(c.is_pure for c in components)
    chain_lengths = {length for c in components for length in c.max_chain_lengths}
    if all_pure and len(chain_lengths) == 1:
        by_poset = SpectrumClass.GORENSTEIN
    elif all_pure:
        by_poset = SpectrumClass.GORENSTEIN_ON_PUNCTURED_SPECTRUM
    else:
        by_poset = SpectrumClass.NEITHER
    if primary != by_poset:
        raise InternalInconsistency(
            f"classification disagrees: boxes/rectangle={primary} poset={by_poset}"
        )
    return primary
