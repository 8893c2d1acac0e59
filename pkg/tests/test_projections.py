import pytest

from lconvex import (
    AmbiguousRealization,
    NoRealization,
    ProjectionPair,
    ferrer_from_rows,
    ferrer_project,
    from_cells,
    is_ferrer,
    is_unimodal,
    projections,
    reconstruct_l_convex,
)

from shapes import CROSS, SKEW_CROSS, TOWER, ferrer, lcx, rectangle


def test_projections_cross():
    pp = projections(CROSS)
    assert pp.h == (2, 2, 3, 5, 2)
    assert pp.v == (1, 2, 5, 5, 1)


def test_projections_single_cell():
    pp = projections(from_cells([(0, 0)]))
    assert pp.h == (1,) and pp.v == (1,)


def test_projections_rectangle():
    pp = projections(rectangle(4, 2))
    assert pp.h == (4, 4) and pp.v == (2, 2, 2, 2)


def test_projection_pair_validates():
    with pytest.raises(ValueError):
        ProjectionPair((2,), (1,))
    with pytest.raises(ValueError):
        ProjectionPair((1, 0), (1,))


def test_unimodal():
    assert is_unimodal((1, 2, 5, 5, 1))
    assert is_unimodal((3,))
    assert not is_unimodal((2, 1, 2))


def test_ferrer_project_cross():
    star = ferrer_project(CROSS)
    pp = projections(star)
    assert pp.h == (5, 3, 2, 2, 2)
    assert pp.v == (5, 5, 2, 1, 1)


def test_ferrer_project_skew_cross():
    star = ferrer_project(SKEW_CROSS)
    pp = projections(star)
    assert pp.h == (5, 3, 2, 2, 1)
    assert pp.v == (5, 4, 2, 1, 1)


def test_ferrer_project_idempotent():
    star = ferrer_project(TOWER)
    assert ferrer_project(star) == star


def test_is_ferrer():
    assert is_ferrer(ferrer(7, 5, 4, 3, 3, 2, 1))
    assert not is_ferrer(CROSS)
    assert is_ferrer(from_cells([(0, 0)]))


def test_ferrer_from_rows_is_top_left_justified():
    f = ferrer(3, 1)
    assert f.cells == frozenset({(0, 1), (1, 1), (2, 1), (0, 0)})


def test_reconstruct_cross():
    assert reconstruct_l_convex(ProjectionPair((2, 2, 3, 5, 2), (1, 2, 5, 5, 1))) == CROSS


def test_reconstruct_rectangle():
    assert reconstruct_l_convex(ProjectionPair((3, 3), (2, 2, 2))) == rectangle(3, 2)


def test_reconstruct_staircase():
    got = reconstruct_l_convex(ProjectionPair((2, 1), (2, 1)))
    assert got.cells == frozenset({(0, 0), (0, 1), (1, 1)})


def test_reconstruct_no_realization():
    with pytest.raises(NoRealization):
        reconstruct_l_convex(ProjectionPair((1, 1), (1, 1)))


def test_reconstruct_rejects_oversized_rows():
    with pytest.raises(NoRealization):
        reconstruct_l_convex(ProjectionPair((3,), (1, 2)))


def test_roundtrip_fixtures():
    for p in (TOWER, CROSS, SKEW_CROSS):
        assert reconstruct_l_convex(projections(p)) == p


def test_projection_multisets_preserved():
    pp = projections(CROSS)
    ps = projections(ferrer_project(CROSS))
    assert sorted(pp.h) == sorted(ps.h)
    assert sorted(pp.v) == sorted(ps.v)
