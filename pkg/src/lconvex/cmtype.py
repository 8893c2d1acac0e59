"""Closed-form Cohen-Macaulay type from the maximal-rectangle sizes.

An L-convex polyomino with t maximal rectangles of sizes c_i x d_i
(c_1 < ... < c_t = width, d_1 = height > ... > d_t) has longest-chain size
r = max{height, width, height + width - (c_h + d_{h+1})}.  When the maximum
is attained once, the matching case formula below counts the rank-bounded
minimal order-reversing maps on the associated poset.  When several cases
tie, each attained case value is reported and no closed total is claimed.

Caveat, verified against the enumeration oracle: the case formulas count
maps whose values stay within the longest-chain size.  The true minimal
generator count of the canonical module can strictly exceed this on some
instances (smallest: rows (3,3,3,2), formula 4, true type 5), so agreement
with :func:`lconvex.poset.cm_type_oracle` holds for the rank-bounded count
but not universally for the default (truthful) oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .errors import DegenerateSizes, NotLConvex
from .geometry import Polyomino, is_l_convex, maximal_rectangles


def _c(a: int, b: int) -> int:
    """Binomial with the zero convention outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class CaseValue:
    """One attained case of the closed form."""

    label: str  # "width", "height", "corner h" or "rectangle"
    value: int


@dataclass(frozen=True)
class ClosedTypeResult:
    """Closed-form evaluation: all attained cases, and a total only when the
    longest-chain size is attained by exactly one case."""

    r: int
    cases: tuple[CaseValue, ...]
    total: int | None

    @property
    def is_tie(self) -> bool:
        return self.total is None and len(self.cases) > 1


def rectangle_sizes(p: Polyomino) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(c, d) with c strictly increasing widths and d strictly decreasing
    heights of the maximal rectangles, both 1-based lists returned 0-based."""
    rects = maximal_rectangles(p)
    c = tuple(r.width for r in rects)
    d = tuple(r.height for r in rects)
    return c, d


def case_a(c, d, m: int, n: int) -> int:
    """Count for the case r = width: values on the full column chain are
    forced, free row values are chosen blockwise between the cover bounds."""
    t = len(c)
    ranges = [
        range(m - c[t - j - 1] + 1, m - (n - d[t - j]) + 2)
        for j in range(1, t)
    ]
    total = 0
    for iv in product(*ranges):
        term = _c(iv[0] - 1, d[t - 1])
        for k in range(2, t):
            term *= _c(iv[k - 1] - iv[k - 2] - 1, d[t - k] - d[t - k + 1] - 1)
        term *= _c(m - iv[t - 2], n - d[1] - 1)
        total += term
    return total


def case_b(c, d, m: int, n: int) -> int:
    """Count for the case r = height: forced row chain, free column values."""
    t = len(c)
    total = 0

    def rec(j: int, prev: int, acc: int) -> None:
        nonlocal total
        if j == t:
            total += acc * _c(n - prev, c[0])
            return
        lo = m - c[t - 2] if j == 1 else prev + c[t - j] - c[t - j - 1]
        hi = d[t - 1] if j == 1 else d[t - j]
        for ij in range(lo, hi + 1):
            term = _c(ij - 1, m - c[t - 2] - 1) if j == 1 else _c(ij - prev - 1, c[t - j] - c[t - j - 1] - 1)
            rec(j + 1, ij, acc * term)

    rec(1, 0, 1)
    return total


def case_corner_rows(c, d, m: int, n: int, h: int) -> int:
    """Row-side factor for the mixed chain through corner h."""
    t = len(c)
    if h == t - 1:
        return _c(m - c[t - 2], d[t - 1])
    ranges = [
        range(m - c[t - j - 1] + 1, m - c[h - 1] - (d[h] - d[t - j]) + 2)
        for j in range(1, t - h)
    ]
    total = 0
    for iv in product(*ranges):
        term = _c(iv[0] - 1, d[t - 1])
        for k in range(2, t - h):
            term *= _c(iv[k - 1] - iv[k - 2] - 1, d[t - k] - d[t - k + 1] - 1)
        term *= _c(m - c[h - 1] - iv[t - h - 2], d[h] - d[h + 1] - 1)
        total += term
    return total


def case_corner_cols(c, d, m: int, n: int, h: int) -> int:
    """Column-side factor for the mixed chain through corner h.

    The free column values all exceed m - c_h (the chain element directly
    above them takes that value), so the first block draws from
    {m - c_h + 1, ..., i_1 - 1}.
    """
    t = len(c)
    if h == 1:
        return _c(n - d[1], c[0])
    total = 0
    mt = m - c[h - 1]

    def rec(j: int, prev: int, acc: int) -> None:
        nonlocal total
        if j == h:
            total += acc * _c(mt + n - d[h] - prev, c[0])
            return
        lo = m - c[h - 2] if j == 1 else prev + c[h - j] - c[h - j - 1]
        hi = mt + (d[h - 1] - d[h]) if j == 1 else mt + (d[h - j] - d[h])
        for ij in range(lo, hi + 1):
            term = _c(ij - 1 - mt, c[h - 1] - c[h - 2] - 1) if j == 1 else _c(ij - prev - 1, c[h - j] - c[h - j - 1] - 1)
            rec(j + 1, ij, acc * term)

    rec(1, 0, 1)
    return total


def closed_cm_type_from_sizes(c, d) -> ClosedTypeResult:
    """Evaluate the closed form from maximal-rectangle sizes (c increasing
    widths, d decreasing heights)."""
    t = len(c)
    if t != len(d) or t < 1:
        raise ValueError("need matching nonempty size lists")
    m, n = c[-1], d[0]
    if t == 1:
        # a rectangle: two unrelated chains; the shorter chain's values are
        # free within the longer chain's span
        val = _c(max(m, n), min(m, n))
        return ClosedTypeResult(max(m, n), (CaseValue("rectangle", val),), val)
    candidates: list[tuple[str, int]] = [("width", m), ("height", n)]
    for h in range(1, t):
        candidates.append((f"corner {h}", n + m - (c[h - 1] + d[h])))
    r = max(v for _, v in candidates)
    cases = []
    for label, v in candidates:
        if v != r:
            continue
        if label == "width":
            cases.append(CaseValue(label, case_a(c, d, m, n)))
        elif label == "height":
            cases.append(CaseValue(label, case_b(c, d, m, n)))
        else:
            h = int(label.split()[1])
            cases.append(
                CaseValue(label, case_corner_rows(c, d, m, n, h) * case_corner_cols(c, d, m, n, h))
            )
    total = cases[0].value if len(cases) == 1 else None
    return ClosedTypeResult(r, tuple(cases), total)


def closed_cm_type(p: Polyomino) -> ClosedTypeResult:
    """Closed-form type of an L-convex polyomino."""
    if not is_l_convex(p):
        raise NotLConvex("closed-form type needs an L-convex polyomino")
    c, d = rectangle_sizes(p)
    return closed_cm_type_from_sizes(c, d)


def cm_type_two_rect(m: int, s: int, t: int, n: int) -> ClosedTypeResult:
    """Two maximal rectangles, m wide s tall and t wide n tall (s < n, t < m)."""
    if not (0 < s < n and 0 < t < m):
        raise DegenerateSizes(f"need 0 < s < n and 0 < t < m, got m={m} s={s} t={t} n={n}")
    return closed_cm_type_from_sizes((t, m), (n, s))
