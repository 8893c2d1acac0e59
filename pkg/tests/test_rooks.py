from itertools import combinations
from math import factorial

import pytest

from lconvex import (
    NotDescending,
    NotLConvex,
    ferrer_project,
    ferrer_rook_count,
    projections,
    regularity,
    rook_count,
    rook_number,
    transpose,
)

from shapes import CROSS, GOR_331, S_STEP, SKEW_CROSS, TOWER, ferrer, lcx, rectangle


def brute_rook_count(p, k):
    """independent oracle: scan all k-subsets of cells"""
    cells = p.sorted_cells()
    total = 0
    for combo in combinations(cells, k):
        xs = {c[0] for c in combo}
        ys = {c[1] for c in combo}
        if len(xs) == k and len(ys) == k:
            total += 1
    return total


def test_one_rook_counts_cells():
    for p in (CROSS, SKEW_CROSS, TOWER):
        assert rook_count(p, 1) == len(p.cells)


def test_two_by_two():
    assert rook_count(rectangle(2, 2), 2) == 2


def test_rook_count_matches_subset_scan():
    for p in (CROSS, SKEW_CROSS, GOR_331):
        for k in range(0, 5):
            assert rook_count(p, k) == brute_rook_count(p, k)


def test_cross_rook_profile():
    assert rook_count(CROSS, 4) > 0
    assert rook_count(CROSS, 5) == 0
    assert rook_number(CROSS) == 4


def test_skew_cross_rook_number():
    assert rook_number(SKEW_CROSS) == 4


def test_rectangle_rook_number():
    assert rook_number(rectangle(4, 2)) == 2


def test_rook_number_staircase_invariant():
    for p in (CROSS, SKEW_CROSS, TOWER):
        star = ferrer_project(p)
        assert rook_number(p) == rook_number(star)
        for k in range(0, 6):
            assert rook_count(p, k) == rook_count(star, k)


def test_ferrer_rook_count_staircase():
    assert ferrer_rook_count((2, 1), 2) == 1
    assert ferrer_rook_count((2, 1), 1) == 3


def test_ferrer_rook_count_square_full():
    for n in range(1, 6):
        assert ferrer_rook_count((n,) * n, n) == factorial(n)


def test_ferrer_rook_count_vanishes_beyond_rook_number():
    assert ferrer_rook_count((5, 3, 2, 2, 1), 5) == 0


def test_ferrer_rook_count_matches_brute_force():
    for widths in [(2, 2, 1), (4, 4, 3), (3, 1, 1), (5, 3, 2, 2, 1), (4, 2)]:
        f = ferrer(*widths)
        for k in range(0, len(widths) + 2):
            assert ferrer_rook_count(widths, k) == rook_count(f, k), (widths, k)


def test_ferrer_rook_count_guards():
    with pytest.raises(NotDescending):
        ferrer_rook_count((1, 2), 1)
    with pytest.raises(NotDescending):
        ferrer_rook_count((2, 0), 1)
    assert ferrer_rook_count((3, 2), 0) == 1
    assert ferrer_rook_count((3, 2), 5) == 0


def test_regularity_rectangle():
    assert regularity(rectangle(4, 2)) == 2
    assert regularity(rectangle(3, 3)) == 3


def test_regularity_cross():
    # descending rows (5,3,2,2,2): min{5, 5, 4, 4, 5, 6} = 4
    assert regularity(CROSS) == 4


def test_regularity_skew_cross():
    assert regularity(SKEW_CROSS) == 4


def test_regularity_equals_rook_number_on_fixtures():
    for p in (CROSS, SKEW_CROSS, TOWER, GOR_331):
        assert regularity(p) == rook_number(p)


def test_regularity_transpose_invariant():
    for p in (CROSS, SKEW_CROSS, GOR_331):
        assert regularity(p) == regularity(transpose(p))


def test_regularity_guard():
    with pytest.raises(NotLConvex):
        regularity(S_STEP)
