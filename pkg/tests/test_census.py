import random
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from regsub.associahedron import (AssocTable, all_part_tuples, assoc_f_vector, assoc_faces,
                                  catalan, catalan_inequalities)
from regsub.census import enumerate_subdivisions, face_census, stratified_comparison, verify_main_theorem
from regsub.configs import FAN6, HEX6, MOAE6, convex_polygon
from regsub.enumeration import all_subdivisions
from regsub.errors import GeneralPositionRequired, OutOfRange, SizeLimit
from regsub.geometry import PointConfiguration, convex_hull
from regsub.signatures import run_lengths
from regsub.subdivision import is_regular, lift_subdivision, refines, validate_subdivision

from .helpers import catalan_dp, random_config


def test_catalan_examples():
    assert [catalan(0), catalan(4), catalan(10)] == [1, 14, 16796]
    assert all(catalan(n) == catalan_dp(n) for n in range(25))


def test_assoc_examples():
    assert assoc_faces(4, 0) == 14 and assoc_faces(4, 2) == 9 and assoc_faces(4, 1) == 21
    assert all(assoc_faces(n, 0) == catalan(n) and assoc_faces(n, n - 1) == 1 for n in range(1, 15))
    table = AssocTable(5)
    assert [table[k] for k in range(5)] == [42, 84, 56, 14, 1]
    with pytest.raises(OutOfRange):
        assoc_faces(4, 4)


def test_catalan_inequality_examples():
    v = catalan_inequalities((1, 1), 0)
    assert (v.product_lhs, v.product_rhs, v.ok) == (1, 2, True)
    v = catalan_inequalities((2, 3), 0)
    assert (v.product_lhs, v.product_rhs) == (10, 42)
    v = catalan_inequalities((2, 2), 1)
    assert (v.convolution_lhs, v.convolution_rhs) == (2 * assoc_faces(2, 1) * assoc_faces(2, 0), 21)


def test_part_tuples_are_compositions():
    tuples = list(all_part_tuples(5))
    assert len(tuples) == 2 ** 5 - 1 and len(set(tuples)) == len(tuples)


def test_enumeration_examples():
    assert len(enumerate_subdivisions(HEX6, regular_only=True, dimension=0)) == 14
    triangulations = [s for s in all_subdivisions(FAN6) if all(len(c) == 3 for c in s.cells)]
    assert len(triangulations) == 8
    assert len(enumerate_subdivisions(MOAE6, regular_only=True, dimension=2)) == 10


def test_census_examples():
    assert face_census(HEX6).f_vector == (14, 21, 9, 1)
    moae = face_census(MOAE6)
    assert moae.f_vector[2] == 10 and moae.f_vector[0] >= 14
    assert moae.total - moae.regular_count == 14


def test_size_guard():
    cfg = PointConfiguration.from_coords([(i, i * i) for i in range(10)])
    with pytest.raises(SizeLimit):
        face_census(cfg)
    with pytest.raises(SizeLimit):
        verify_main_theorem(cfg)
    with pytest.raises(GeneralPositionRequired):
        verify_main_theorem(FAN6)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_convex_ground_truth(n):
    assert face_census(convex_polygon(n)).f_vector == assoc_f_vector(n)


def test_main_theorem_examples():
    assert verify_main_theorem(HEX6).margins == (0, 0, 0, 0)
    rep = verify_main_theorem(MOAE6)
    assert rep.passed and rep.f_vector[2] == 10


def euler_ok(f):
    top = len(f) - 1
    return f[top] == 1 and sum((-1) ** k * v for k, v in enumerate(f[:top])) == 1 - (-1) ** top


@settings(max_examples=6)
@given(st.integers(0, 10 ** 6))
def test_census_properties(seed):
    rng = random.Random(seed)
    cfg = random_config(6, rng)
    census = face_census(cfg)
    assert euler_ok(census.f_vector)
    regular = [s for s, _ in census.regular]
    regular_set = set(regular)
    triangulations = [s for s, d in census.regular if d == 0]
    for s in regular:
        assert not validate_subdivision(cfg, s)
        assert lift_subdivision(cfg, is_regular(cfg, s).witness) == s
        assert any(refines(t, s) for t in triangulations)
    for _ in range(60):
        h = [Fraction(rng.randint(-4, 4)) for _ in range(cfg.n)]
        assert lift_subdivision(cfg, h) in regular_set
    assert verify_main_theorem(cfg, census=census).passed


def test_stratified_examples():
    cfg = convex_polygon(6)
    rep = stratified_comparison(cfg, convex_hull(cfg)[0])
    assert rep.passed and all(r.count == r.convex_count for r in rep.rows)
    moae = face_census(MOAE6)
    for apex in convex_hull(MOAE6):
        rep = stratified_comparison(MOAE6, apex, census=moae)
        assert rep.passed and len(rep.per_signature) == 27
    hexrep = stratified_comparison(HEX6, 0)
    for sig in hexrep.per_signature:
        if "0" not in sig:
            triangs = sum(r.count for r in hexrep.rows if r.sigma == sig and sum(r.delta) == 0)
            assert triangs == prod(catalan(m) for m in run_lengths(sig))
