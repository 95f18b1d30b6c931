import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from regsub.configs import HEX6, MOAE6
from regsub.errors import AntipodalPair, DuplicateParameter, NotGeneric, RankDeficient
from regsub.gale import (HighDimConfiguration, SphericalVectors, affine_image, arc_crossings, arcs_cross,
                         chamber_count, chamber_formula, duality_check, euler_face_count, gale_dual,
                         hill_number, homogenized, moment_curve, planar_as_high_dim, two_circle_vectors)
from regsub._triang3d import regular_triangulation_count, triangulations

from .helpers import float_arcs_cross, rational_rotation

small = st.integers(-6, 6)
vec = st.tuples(small, small, small).filter(lambda v: any(v))


def apply(m, v):
    return tuple(sum(m[r][k] * v[k] for k in range(3)) for r in range(3))


def test_gale_kernel_identity():
    cfg = moment_curve(7, 3)
    vs = gale_dual(cfg)
    m = homogenized(cfg)
    for row in m:
        for k in range(3):
            assert sum(row[i] * vs.vectors[i][k] for i in range(cfg.n)) == 0


def test_rank_and_parameter_errors():
    flat = HighDimConfiguration(tuple((i, 2 * i) for i in range(6)))
    with pytest.raises(RankDeficient):
        gale_dual(flat)
    with pytest.raises(DuplicateParameter):
        moment_curve(5, 2, [1, 2, 2, 3, 4])
    with pytest.raises(AntipodalPair):
        arc_crossings(SphericalVectors(((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))))


def test_crossing_examples():
    assert arcs_cross((1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)) is not None
    assert arcs_cross((1, 0, 1), (2, 0, 1), (0, 1, 1), (0, -1, 1)) is None
    # four rays around a pole: the two diagonals cross once
    quad = SphericalVectors(((1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (1, 1, -5)))
    assert arc_crossings(quad).c == 1


@given(vec, vec, vec, vec)
def test_crossing_matches_float_oracle(a, b, c, d):
    vs = [a, b, c, d]
    from regsub.gale import crossp, det3

    for i in range(4):
        for j in range(i + 1, 4):
            assume(any(crossp(vs[i], vs[j])))
    for tri in ((a, b, c), (a, b, d), (c, d, a), (c, d, b)):
        assume(det3(*tri) != 0)
    assert (arcs_cross(a, b, c, d) is not None) == float_arcs_cross(a, b, c, d)


def test_hill_numbers():
    assert [hill_number(n) for n in range(5, 13)] == [1, 3, 9, 18, 36, 60, 100, 150]


def test_two_circle_examples():
    vs = two_circle_vectors(6)
    assert sum(v[2] > 0 for v in vs.vectors) == 3 and sum(v[2] < 0 for v in vs.vectors) == 3
    for n in range(5, 13):
        rep = arc_crossings(two_circle_vectors(n))
        assert rep.generic and rep.c == hill_number(n)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_formula_matches_euler(n):
    vs = two_circle_vectors(n)
    rep = arc_crossings(vs)
    V, E, F = euler_face_count(vs, rep)
    assert V - E + F == 2 and F == chamber_formula(n, rep.c) == chamber_count(vs)


def test_invariance_under_affine_maps_and_rotations():
    cfg = moment_curve(7, 3)
    base = arc_crossings(gale_dual(cfg)).c
    moved = affine_image(cfg, [[2, 1, 0], [0, 3, 1], [1, 0, 5]], [7, -2, 1])
    assert arc_crossings(gale_dual(moved)).c == base
    vs = gale_dual(cfg)
    rot = rational_rotation(2, 7)
    turned = SphericalVectors(tuple(apply(rot, v) for v in vs.vectors))
    scaled = SphericalVectors(tuple(tuple(Fraction(i + 1) * c for c in v) for i, v in enumerate(vs.vectors)))
    assert arc_crossings(turned).c == arc_crossings(scaled).c == base


@settings(max_examples=10)
@given(st.integers(0, 10 ** 6))
def test_random_formula_matches_euler(seed):
    rng = random.Random(seed)
    vs = SphericalVectors(tuple(tuple(Fraction(rng.randint(-30, 30)) for _ in range(3)) for _ in range(7)))
    try:
        rep = arc_crossings(vs)
    except (AntipodalPair, ValueError):
        return
    if rep.generic:
        V, E, F = euler_face_count(vs, rep)
        assert F == chamber_formula(7, rep.c) and V - E + F == 2
    else:
        with pytest.raises(NotGeneric):
            chamber_count(vs)


def test_triang3d_counts():
    for n, want in [(5, 2), (6, 6), (7, 25)]:
        assert regular_triangulation_count(moment_curve(n, 3).points) == want
    assert len(triangulations(moment_curve(6, 3).points)) == 6


def test_duality_examples():
    rep = duality_check(planar_as_high_dim(HEX6))
    assert (rep.chambers, rep.triangulations, rep.generic) == (14, 14, True)
    rep = duality_check(planar_as_high_dim(MOAE6))
    assert rep.passed and rep.chambers == 16 and not rep.generic
    assert duality_check(planar_as_high_dim(MOAE6), perturb=True).generic
    rep = duality_check(moment_curve(7, 3))
    assert rep.generic and rep.chambers == rep.triangulations == 25
