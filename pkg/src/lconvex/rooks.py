"""Non-attacking rook placements and Castelnuovo-Mumford regularity.

Counts are exact Python integers (they grow factorially).  The brute-force
counter and the staircase closed form are kept independent on purpose: one
cross-checks the other.
"""

from __future__ import annotations

from .errors import InternalInconsistency, NotDescending, NotLConvex
from .geometry import Polyomino, is_l_convex
from .projections import ferrer_project, projections


def rook_count(p: Polyomino, k: int) -> int:
    """Number of ways to place k non-attacking rooks on cells of p, by plain
    backtracking over rows (no closed form, no memo: this is the oracle)."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    _, n = p.bbox
    rows = [sorted(x for x, y in p.cells if y == yy) for yy in range(n)]

    def place(row: int, used: frozenset[int], need: int) -> int:
        if need == 0:
            return 1
        if row == n or n - row < need:
            return 0
        total = place(row + 1, used, need)
        for x in rows[row]:
            if x not in used:
                total += place(row + 1, used | {x}, need - 1)
        return total

    return place(0, frozenset(), k)


def rook_number(p: Polyomino) -> int:
    """Largest k admitting a placement of k non-attacking rooks."""
    m, n = p.bbox
    best = 0
    for k in range(1, min(m, n) + 1):
        if rook_count(p, k) == 0:
            break
        best = k
    return best


def ferrer_rook_count(h, k: int) -> int:
    """k-rook placements on the staircase board with top-to-bottom row
    widths h (weakly decreasing), by the product rule.

    Placing rooks into a chosen set of k rows from the narrowest chosen row
    upward gives, for the i-th rook placed, (width - (i-1)) free columns;
    summing the products over all k-subsets of rows counts every placement
    once.  Equivalently, adding rows widest-last yields the recurrence
    r_k' = r_k + (w - k + 1) * r_{k-1}, which is what is evaluated here.
    For k rooks in the k widest rows the sum collapses to the single
    falling product over (h_k, ..., h_1); a non-positive factor there means
    no placement uses k distinct rows, hence the count is 0 beyond the rook
    number.
    """
    h = tuple(int(x) for x in h)
    if any(a < b for a, b in zip(h, h[1:])):
        raise NotDescending(f"row widths must be weakly decreasing, got {h}")
    if any(x < 1 for x in h):
        raise NotDescending(f"row widths must be positive, got {h}")
    if k < 0:
        return 0
    if k > len(h):
        return 0
    counts = [1] + [0] * k  # counts[j] = j-rook placements on rows added so far
    for w in reversed(h):  # narrowest row first; each new row is at least as wide
        for j in range(min(k, len(h)), 0, -1):
            counts[j] = counts[j] + counts[j - 1] * (w - (j - 1))
    return counts[k]


def regularity(p: Polyomino) -> int:
    """Regularity of the polyomino's coordinate ring, computed from the
    descending row projections h* of the staircase projection as
    min{n, h*_j + j - 1}.

    The column-side formula min{m, v*_j + j - 1} is evaluated as well and
    must agree; both equal the rook number.
    """
    if not is_l_convex(p):
        raise NotLConvex("regularity formula needs an L-convex polyomino")
    star = ferrer_project(p)
    pp = projections(star)
    n = len(pp.h)
    m = len(pp.v)
    by_rows = min([n] + [pp.h[j - 1] + j - 1 for j in range(1, n + 1)])
    by_cols = min([m] + [pp.v[j - 1] + j - 1 for j in range(1, m + 1)])
    if by_rows != by_cols:
        raise InternalInconsistency(
            f"row/column regularity formulas disagree: {by_rows} vs {by_cols}"
        )
    return by_rows
