import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from regsub.configs import FAN6, HEX6, MOAE6
from regsub.errors import DegenerateHull, DuplicatePoint, NotHullVertex, PointAtInfinity
from regsub.geometry import (Point2, PointConfiguration, ProjectiveMap, angular_order,
                             apply_projective, as_rational, convex_hull, in_general_position,
                             orientation)
from regsub.signatures import separating_projective_map, _auxiliary_point

from .helpers import brute_hull_vertices, random_config

P = Point2.of
coords = st.integers(-50, 50)
points = st.builds(P, coords, coords)


def test_orientation_examples():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orientation(P(0, 0), P(1, 1), P(2, 2)) == 0
    assert orientation(P(0, 0), P(0, 1), P(1, 0)) == -1


@given(points, points, points)
def test_orientation_antisymmetric(p, q, r):
    assert orientation(p, q, r) == -orientation(q, p, r) == orientation(q, r, p)


def test_general_position_examples():
    assert in_general_position(HEX6)
    assert not in_general_position(FAN6)
    assert in_general_position(PointConfiguration.from_coords([(0, 0), (1, 1)]))


def test_rationals_are_exact():
    assert as_rational("3/4") == Fraction(3, 4)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(DuplicatePoint):
        PointConfiguration.from_coords([(0, 0), (1, 0), (0, 0)])


def test_hull_examples():
    assert sorted(convex_hull(HEX6)) == list(range(6))
    assert set(convex_hull(MOAE6)) == {0, 1, 2}
    assert convex_hull(FAN6) == (0, 4, 5)
    with pytest.raises(DegenerateHull):
        convex_hull(PointConfiguration.from_coords([(0, 0), (1, 1), (2, 2)]))


@given(st.integers(0, 10 ** 6), st.integers(4, 9))
def test_hull_matches_brute_force(seed, n):
    cfg = random_config(n, random.Random(seed))
    cyc = convex_hull(cfg)
    pts = cfg.points
    assert set(cyc) == brute_hull_vertices(cfg)
    assert all(orientation(pts[cyc[k]], pts[cyc[(k + 1) % len(cyc)]], pts[cyc[(k + 2) % len(cyc)]]) > 0
               for k in range(len(cyc)))


def test_angular_order_examples():
    b, c, order = angular_order(MOAE6, 2)
    assert {b, c} == {0, 1} and order[0] == b and order[-1] == c
    assert sorted(order) == [0, 1, 3, 4, 5]
    b, c, order = angular_order(HEX6, 1)
    assert len(order) == 5 and (b, c) == (2, 0)
    with pytest.raises(NotHullVertex):
        angular_order(MOAE6, 3)


@given(st.integers(0, 10 ** 6), st.integers(4, 8))
def test_angular_order_is_counterclockwise(seed, n):
    cfg = random_config(n, random.Random(seed))
    apex = convex_hull(cfg)[0]
    _, _, order = angular_order(cfg, apex)
    pts = cfg.points
    assert sorted(order + (apex,)) == list(range(n))
    assert all(orientation(pts[apex], pts[u], pts[v]) > 0 for u, v in zip(order, order[1:]))


def test_projective_examples():
    assert apply_projective(ProjectiveMap.identity(), HEX6) == HEX6
    doubled = apply_projective(ProjectiveMap(((2, 0, 0), (0, 2, 0), (0, 0, 1))), HEX6)
    assert doubled.points[0] == P(8, 0)
    with pytest.raises(PointAtInfinity):
        ProjectiveMap(((1, 0, 0), (0, 1, 0), (1, 0, -4)))(P(4, 0))
    with pytest.raises(ValueError):
        ProjectiveMap(((1, 0, 0), (2, 0, 0), (0, 0, 1)))


@given(st.integers(0, 10 ** 6))
def test_separating_map_moves_meeting_point(seed):
    cfg = random_config(7, random.Random(seed))
    for apex in convex_hull(cfg):
        pmap = separating_projective_map(cfg, apex)
        image = cfg if pmap is None else apply_projective(pmap, cfg)
        if pmap is not None:
            assert pmap.determinant() > 0
            assert all(pmap.weight(p) > 0 for p in cfg.points)
            pts, ipts = cfg.points, image.points
            for i in range(0, cfg.n - 2):
                assert orientation(pts[i], pts[i + 1], pts[i + 2]) == orientation(ipts[i], ipts[i + 1], ipts[i + 2])
        assert _auxiliary_point(image, apex) is not None
