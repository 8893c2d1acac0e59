"""Shared test shapes.

The named fixtures are used across test modules; the two cross-shaped
pentomino-like shapes are pinned by their projections and exercised against
hand-checked values throughout the suite.
"""

from lconvex import ProjectionPair, ferrer_from_rows, from_cells, reconstruct_l_convex


def lcx(h, v):
    """The unique L-convex polyomino with these projections."""
    return reconstruct_l_convex(ProjectionPair(tuple(h), tuple(v)))


def ferrer(*widths):
    return ferrer_from_rows(widths)


def rectangle(m, n):
    return from_cells([(x, y) for x in range(m) for y in range(n)])


# 7 wide, 10 tall, 34 cells; maximal rectangles 7x2, 4x5, 3x6, 2x7, 1x10
TOWER = lcx((1, 1, 2, 4, 7, 7, 4, 4, 3, 1), (2, 5, 7, 10, 6, 2, 2))

# 5x5 cross with offset arms; H top-to-bottom
CROSS = lcx((2, 2, 3, 5, 2), (1, 2, 5, 5, 1))

# skewed variant of CROSS, one cell less
SKEW_CROSS = lcx((1, 2, 3, 5, 2), (1, 2, 5, 4, 1))

# staircase with rows 5,3,2,1: ties all four closed-form cases
STAIR_5321 = ferrer(5, 3, 2, 1)

# the smallest Gorenstein non-rectangle used in examples
GOR_331 = ferrer(3, 3, 1)

S_STEP = from_cells([(0, 0), (0, 1), (1, 1), (1, 2)])
