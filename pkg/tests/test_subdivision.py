import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from regsub.configs import HEX6, MOAE6
from regsub.errors import DimensionMismatch, NotRegular
from regsub.geometry import convex_hull
from regsub.subdivision import (HeightVector, Subdivision, cell_polygon, face_dimension,
                                is_regular, lift_subdivision, refine_with, refines,
                                secondary_cone, secondary_span_dimension, validate_subdivision)

from .helpers import in_circle, random_config

seeds = st.integers(0, 10 ** 6)


def rand_heights(rng, n, lo=-3, hi=3):
    return [Fraction(rng.randint(lo, hi)) for _ in range(n)]


def test_zero_lift_is_trivial():
    assert lift_subdivision(HEX6, [0] * 6) == Subdivision.trivial(6)


def test_paraboloid_lift_is_delaunay():
    sub = lift_subdivision(HEX6, [p.x ** 2 + p.y ** 2 for p in HEX6.points])
    pts = HEX6.points
    assert not validate_subdivision(HEX6, sub)
    for cell in sub.cells:
        poly = cell_polygon(HEX6, cell)
        a, b, c = (pts[v] for v in poly[:3])
        for q in range(6):
            expected = 0 if q in cell else -1
            assert in_circle(a, b, c, pts[q]) == expected
    # the cocircular rectangle 1,2,4,5 stays one cell
    assert frozenset({1, 2, 4, 5}) in sub.cells


def test_raised_inner_point_is_unused():
    sub = lift_subdivision(MOAE6, [0, 0, 0, 1, 0, 0])
    assert sub.unused == {3}
    assert not validate_subdivision(MOAE6, sub)


def test_wrong_length_rejected():
    with pytest.raises(DimensionMismatch):
        lift_subdivision(HEX6, [0] * 5)


def test_validate_catches_bad_subdivisions():
    overlap = Subdivision.from_cells([(0, 1, 3), (0, 2, 4), (0, 3, 4, 5)], 6)
    kinds = {v.kind for v in validate_subdivision(HEX6, overlap)}
    assert "proper_intersection" in kinds
    hole = Subdivision.from_cells([(0, 1, 2), (0, 2, 3), (0, 3, 4)], 6)
    assert {v.kind for v in validate_subdivision(HEX6, hole)} == {"covering"}


def test_span_dimension_examples():
    assert secondary_span_dimension(HEX6, Subdivision.trivial(6)) == 3
    fan = Subdivision.from_cells([(0, k, k + 1) for k in range(1, 5)], 6)
    assert secondary_span_dimension(HEX6, fan) == 6
    split = Subdivision.from_cells([(0, 1, 2, 3), (3, 4, 5, 0)], 6)
    assert secondary_span_dimension(HEX6, split) == 4


def test_face_dimension_examples():
    assert face_dimension(HEX6, Subdivision.trivial(6)) == 3
    fan = Subdivision.from_cells([(0, k, k + 1) for k in range(1, 5)], 6)
    assert face_dimension(HEX6, fan) == 0
    one = Subdivision.from_cells([(0, 1, 2), (0, 2, 3, 4, 5)], 6)
    assert face_dimension(HEX6, one) == 2


def test_non_regular_moae_triangulations():
    # the two rotational triangulations of the nested triangles
    twist_a = [(0, 1, 3), (1, 2, 4), (2, 0, 5), (0, 3, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5)]
    twist_b = [(0, 1, 4), (1, 2, 5), (2, 0, 3), (0, 3, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5)]
    for cells in (twist_a, twist_b):
        sub = Subdivision.from_cells(cells, 6)
        assert not validate_subdivision(MOAE6, sub)
        assert not is_regular(MOAE6, sub).regular
        with pytest.raises(NotRegular):
            face_dimension(MOAE6, sub)


@given(seeds, st.integers(4, 7))
def test_lift_round_trip(seed, n):
    rng = random.Random(seed)
    cfg = random_config(n, rng)
    sub = lift_subdivision(cfg, rand_heights(rng, n))
    assert not validate_subdivision(cfg, sub)
    cert = is_regular(cfg, sub)
    assert cert.regular and cert.verdict == "regular"
    assert lift_subdivision(cfg, cert.witness) == sub


@given(seeds, st.integers(4, 7))
def test_secondary_cone_forms_are_affine_dependences(seed, n):
    rng = random.Random(seed)
    cfg = random_config(n, rng)
    cone = secondary_cone(cfg, lift_subdivision(cfg, rand_heights(rng, n)))
    for form in cone.equalities + cone.strict_inequalities:
        assert sum(form) == 0
        assert sum(c * p.x for c, p in zip(form, cfg.points)) == 0
        assert sum(c * p.y for c, p in zip(form, cfg.points)) == 0


@given(seeds, st.integers(4, 7), st.integers(1, 5), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_scaling_and_affine_invariance(seed, n, lam, a, b, c):
    rng = random.Random(seed)
    cfg = random_config(n, rng)
    h = rand_heights(rng, n)
    moved = [lam * v + a * p.x + b * p.y + c for v, p in zip(h, cfg.points)]
    assert lift_subdivision(cfg, moved) == lift_subdivision(cfg, h)


@given(seeds, st.integers(4, 7))
def test_refinement_is_monotone_in_dimension(seed, n):
    rng = random.Random(seed)
    cfg = random_config(n, rng)
    alpha = rand_heights(rng, n, 0, 1)
    coarse = lift_subdivision(cfg, alpha)
    fine = refine_with(cfg, alpha, rand_heights(rng, n))
    assert refines(fine, coarse)
    assert refines(fine, Subdivision.trivial(n)) and (fine == coarse or not refines(coarse, fine))
    d_fine, d_coarse = face_dimension(cfg, fine), face_dimension(cfg, coarse)
    assert d_fine <= d_coarse and (d_fine == d_coarse) == (fine == coarse)


def test_refine_with_zero_and_trivial():
    rng = random.Random(7)
    cfg = random_config(6, rng)
    alpha = rand_heights(rng, 6)
    assert refine_with(cfg, alpha, [0] * 6) == lift_subdivision(cfg, alpha)
    omega = rand_heights(rng, 6)
    assert refine_with(cfg, [0] * 6, omega) == lift_subdivision(cfg, omega)
    assert not refines(Subdivision.trivial(6), lift_subdivision(cfg, [p.x ** 2 + p.y ** 2 for p in cfg.points]))


@given(seeds, st.integers(4, 7))
def test_infinitesimal_matches_small_epsilon(seed, n):
    """Oracle: lexicographic refinement equals lift(alpha + eps*omega) once eps is small."""
    rng = random.Random(seed)
    cfg = random_config(n, rng)
    alpha, omega = rand_heights(rng, n, 0, 2), rand_heights(rng, n)
    target = refine_with(cfg, alpha, omega)
    eps = Fraction(1)
    stable = 0
    for _ in range(40):
        got = lift_subdivision(cfg, [a + eps * w for a, w in zip(alpha, omega)])
        stable = stable + 1 if got == target else 0
        if stable == 4:
            break
        eps /= 2
    assert stable == 4


def test_height_vector_levels():
    hv = HeightVector.of([1, 2, 3], [0, 1, 0])
    assert hv[1] == (2, 1) and hv.n == 3
    assert hv.refined([5, 5, 5]).levels[-1] == (5, 5, 5)
    with pytest.raises(DimensionMismatch):
        HeightVector.of([1, 2], [1])
