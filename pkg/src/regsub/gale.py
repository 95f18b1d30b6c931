"""Gale duals on the 2-sphere, geodesic arc crossings and chamber counts.

Sphere points are unnormalized rational vectors in R^3; every predicate is a
sign of a homogeneous polynomial, so no square roots are ever taken.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import AntipodalPair, DuplicateParameter, NotGeneric, RankDeficient
from .geometry import as_rational
from .linalg import nullspace, primitive, rank

Vec3 = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class HighDimConfiguration:
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(as_rational(v) for v in p) for p in self.points)
        if len({len(p) for p in pts}) > 1:
            raise ValueError("all points need the same dimension")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def d(self) -> int:
        return len(self.points[0]) if self.points else 0


@dataclass(frozen=True)
class SphericalVectors:
    vectors: tuple[Vec3, ...]

    def __post_init__(self):
        vs = tuple(tuple(as_rational(c) for c in v) for v in self.vectors)
        if any(len(v) != 3 for v in vs):
            raise ValueError("sphere vectors live in R^3")
        if any(all(c == 0 for c in v) for v in vs):
            raise ValueError("zero vector has no direction")
        object.__setattr__(self, "vectors", vs)

    @property
    def n(self) -> int:
        return len(self.vectors)


@dataclass
class CrossingReport:
    c: int
    generic: bool
    violations: list[str] = field(default_factory=list)
    multiple_points: int = 0  # points where three or more arcs meet
    pairs: list[tuple[tuple[int, int], tuple[int, int]]] = field(default_factory=list, repr=False)


def dot(u, v) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def crossp(u, v) -> Vec3:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def det3(a, b, c) -> Fraction:
    return dot(a, crossp(b, c))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _parallel(u, v) -> bool:
    return all(c == 0 for c in crossp(u, v))


def moment_curve(n: int, d: int, parameters: Sequence | None = None) -> HighDimConfiguration:
    params = [as_rational(t) for t in (parameters if parameters is not None else range(1, n + 1))]
    if len(params) != n:
        raise ValueError(f"need {n} parameters, got {len(params)}")
    if len(set(params)) != n:
        raise DuplicateParameter("moment curve parameters must be distinct")
    if d < 1:
        raise ValueError("dimension must be positive")
    return HighDimConfiguration(tuple(tuple(t ** k for k in range(1, d + 1)) for t in params))


def homogenized(config: HighDimConfiguration) -> list[list[Fraction]]:
    """The ``(d+1) x n`` matrix whose columns are ``(1, p)``."""
    return [[Fraction(1)] * config.n] + [[p[k] for p in config.points] for k in range(config.d)]


def gale_dual(config: HighDimConfiguration) -> SphericalVectors:
    m = homogenized(config)
    if rank(m, config.n) != config.d + 1:
        raise RankDeficient("points do not affinely span their space")
    basis = nullspace(m, config.n)
    if len(basis) != 3:
        raise ValueError(f"Gale dual lies in R^{len(basis)}, need n = d + 4")
    return SphericalVectors(tuple(tuple(b[i] for b in basis) for i in range(config.n)))


def _arc_point(p, q, sp: Fraction, sq: Fraction) -> Vec3:
    """The point of the short arc ``pq`` on the plane where ``p`` has value ``sp`` and ``q`` has ``sq``."""
    a, b = abs(sq), abs(sp)
    return tuple(a * x + b * y for x, y in zip(p, q))


def arcs_cross(a, b, c, d) -> Vec3 | None:
    """Direction of the crossing point of short arcs ``ab`` and ``cd``, or None if they do not cross."""
    n_ab = crossp(a, b)
    n_cd = crossp(c, d)
    s_c, s_d = dot(n_ab, c), dot(n_ab, d)
    if s_c * s_d >= 0:
        return None
    t_a, t_b = dot(n_cd, a), dot(n_cd, b)
    if t_a * t_b >= 0:
        return None
    x_cd = _arc_point(c, d, s_c, s_d)
    x_ab = _arc_point(a, b, t_a, t_b)
    return x_ab if dot(x_ab, x_cd) > 0 else None


def _ray_key(v) -> tuple[int, ...]:
    return primitive(v, canonical_sign=False)


def _check_pairs(vs: Sequence[Vec3]) -> list[str]:
    out = []
    for i, j in combinations(range(len(vs)), 2):
        if _parallel(vs[i], vs[j]):
            if dot(vs[i], vs[j]) < 0:
                raise AntipodalPair(f"vectors {i} and {j} are antipodal")
            out.append(f"vectors {i} and {j} span the same ray")
    return out


def arc_crossings(vs: SphericalVectors) -> CrossingReport:
    v = vs.vectors
    n = len(v)
    violations = _check_pairs(v)
    for i, j, k in combinations(range(n), 3):
        if det3(v[i], v[j], v[k]) == 0:
            violations.append(f"vectors {i}, {j}, {k} lie on one great circle")
    arcs = list(combinations(range(n), 2))
    pairs = []
    at: dict[tuple[int, ...], list] = {}
    for (i, j), (k, l) in combinations(arcs, 2):
        if len({i, j, k, l}) < 4:
            continue
        x = arcs_cross(v[i], v[j], v[k], v[l])
        if x is not None:
            pairs.append(((i, j), (k, l)))
            at.setdefault(_ray_key(x), []).append(((i, j), (k, l)))
    multiple = 0
    for key, hits in at.items():
        if len(hits) > 1:
            multiple += 1
            involved = sorted({a for h in hits for a in h})
            violations.append(f"arcs {involved} meet at one point")
    return CrossingReport(len(pairs), not violations, violations, multiple, pairs)


def chamber_formula(n: int, c: int) -> int:
    return c + comb(n, 2) - n + 2


# --- independent route: trace the faces of the arc arrangement -------------


def _along(a, b):
    """Comparator for points on the short arc from ``a`` to ``b``."""
    normal = crossp(a, b)

    def cmp(x, y):
        return -_sign(dot(normal, crossp(x, y)))

    return cmp


def _tangent_cmp(v):
    """Counterclockwise comparator of directions ``w`` around ``v`` (seen from outside)."""
    vv = dot(v, v)

    def tdot(w1, w2):
        return dot(w1, w2) - dot(w1, v) * dot(w2, v) / vv

    def make(ref):
        def half(w):
            s = _sign(det3(v, ref, w))
            if s == 0:
                return 0 if tdot(ref, w) > 0 else 2
            return 1 if s > 0 else 3

        def cmp(w1, w2):
            h1, h2 = half(w1), half(w2)
            if h1 != h2:
                return h1 - h2
            return -_sign(det3(v, w1, w2))
        return cmp

    return make


def euler_face_count(vs: SphericalVectors, report: CrossingReport | None = None) -> tuple[int, int, int]:
    """``(V, E, F)`` of the arrangement of short arcs, with faces found by tracing.

    Several arcs through one point share a single vertex, so the face count is
    the number of regions even when the arrangement is not generic.  Arcs that
    pass through a third vector are not supported.
    """
    v = vs.vectors
    report = report or arc_crossings(vs)
    for i, j, k in combinations(range(len(v)), 3):
        for a, b, x in ((i, j, k), (i, k, j), (j, k, i)):
            if det3(v[a], v[b], v[x]) == 0 and _along(v[a], v[b])(v[a], v[x]) < 0 \
                    and _along(v[a], v[b])(v[x], v[b]) < 0:
                raise NotGeneric(f"vector {x} lies on the arc between {a} and {b}")
    coords: dict[int, Vec3] = {i: v[i] for i in range(len(v))}
    node_of: dict[tuple[int, ...], int] = {}
    on_arc: dict[tuple[int, int], set[int]] = {arc: set() for arc in combinations(range(len(v)), 2)}
    for (p, q) in report.pairs:
        x = arcs_cross(v[p[0]], v[p[1]], v[q[0]], v[q[1]])
        key = _ray_key(x)
        if key not in node_of:
            node_of[key] = len(coords)
            coords[node_of[key]] = x
        on_arc[p].add(node_of[key])
        on_arc[q].add(node_of[key])
    nbrs: dict[int, set[int]] = {k: set() for k in coords}
    edges = 0
    for (i, j), mids in on_arc.items():
        chain = [i] + sorted(mids, key=cmp_to_key(lambda s, t: _along(v[i], v[j])(coords[s], coords[t]))) + [j]
        for s, t in zip(chain, chain[1:]):
            nbrs[s].add(t)
            nbrs[t].add(s)
            edges += 1
    rotation: dict[int, list[int]] = {}
    for node, ns in nbrs.items():
        c = coords[node]
        ns = sorted(ns)
        ref = coords[ns[0]]
        cmp = _tangent_cmp(c)(ref)
        rotation[node] = sorted(ns, key=cmp_to_key(lambda s, t: cmp(coords[s], coords[t])))
    pos = {node: {w: k for k, w in enumerate(rot)} for node, rot in rotation.items()}
    seen: set[tuple[int, int]] = set()
    faces = 0
    for u in rotation:
        for w in rotation[u]:
            if (u, w) in seen:
                continue
            faces += 1
            a, b = u, w
            while (a, b) not in seen:
                seen.add((a, b))
                rot = rotation[b]
                nxt = rot[(pos[b][a] - 1) % len(rot)]
                a, b = b, nxt
    return len(coords), edges, faces


def chamber_count(vs: SphericalVectors, *, verify: bool = True) -> int:
    report = arc_crossings(vs)
    if not report.generic:
        raise NotGeneric("; ".join(report.violations))
    value = chamber_formula(vs.n, report.c)
    if verify:
        V, E, F = euler_face_count(vs, report)
        if F != value or V - E + F != 2:
            raise AssertionError(f"formula gives {value} chambers, tracing gives V={V} E={E} F={F}")
    return value


def hill_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2) // 4


def _circle_point(k: int, m: int, offset: Fraction) -> tuple[Fraction, Fraction]:
    """A rational point near angle ``2*pi*(k + offset)/m`` on the unit circle."""
    import math

    theta = 2 * math.pi * (k + float(offset)) / m
    t = Fraction(math.tan(theta / 4)).limit_denominator(10 ** 6)
    # double tangent half-angle keeps every angle in range; exact point on the circle
    c1, s1 = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
    return c1 * c1 - s1 * s1, 2 * c1 * s1


def two_circle_vectors(n: int, radius: Fraction = Fraction(1, 10)) -> SphericalVectors:
    """Rays around the north and south poles on two small circles, evenly interleaved."""
    if n < 5:
        raise ValueError("need at least 5 vectors")
    up, down = (n + 1) // 2, n // 2
    vecs = []
    for k in range(up):
        x, y = _circle_point(k, up, Fraction(0))
        vecs.append((radius * x, radius * y, Fraction(1)))
    # a quarter-step twist avoids antipodal pairs and triple crossings
    for k in range(down):
        x, y = _circle_point(k, down, Fraction(1, 4))
        vecs.append((radius * x, radius * y, Fraction(-1)))
    return SphericalVectors(tuple(vecs))


def perturb(vs: SphericalVectors, scale: Fraction = Fraction(1, 10 ** 6)) -> SphericalVectors:
    """Deterministic small rational perturbation, used to restore genericity on request."""
    out = []
    for i, v in enumerate(vs.vectors):
        out.append(tuple(c + scale * Fraction((i + 1) * (k + 2) ** 2 % 17 + 1, 17) for k, c in enumerate(v)))
    return SphericalVectors(tuple(out))


def affine_image(config: HighDimConfiguration, matrix, shift) -> HighDimConfiguration:
    m = [[as_rational(x) for x in row] for row in matrix]
    s = [as_rational(x) for x in shift]
    return HighDimConfiguration(tuple(
        tuple(sum((m[r][k] * p[k] for k in range(config.d)), Fraction(0)) + s[r] for r in range(config.d))
        for p in config.points))


def planar_as_high_dim(config) -> HighDimConfiguration:
    return HighDimConfiguration(tuple((p.x, p.y) for p in config.points))


def perturb_points(config: HighDimConfiguration, scale: Fraction = Fraction(1, 10 ** 4)) -> HighDimConfiguration:
    """Deterministic small rational perturbation of the primal points."""
    return HighDimConfiguration(tuple(
        tuple(c + scale * Fraction((i + 3) * (k + 5) % 13 + 1, 13) for k, c in enumerate(p))
        for i, p in enumerate(config.points)))


@dataclass
class DualityReport:
    n: int
    d: int
    chambers: int
    triangulations: int
    generic: bool
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.chambers == self.triangulations

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def duality_check(config: HighDimConfiguration, *, perturb: bool = False) -> DualityReport:
    """Compare the chamber count of the Gale dual with the regular triangulation count.

    Non-generic duals are not perturbed silently: the regions of the arc
    arrangement are counted directly and the report says the dual is not
    generic.  ``perturb=True`` moves the primal points first.
    """
    from .errors import SizeLimit

    if perturb:
        config = perturb_points(config)
    if config.n != config.d + 4:
        raise ValueError(f"duality needs n = d + 4, got n={config.n}, d={config.d}")
    vs = gale_dual(config)
    report = arc_crossings(vs)
    if report.generic:
        chambers = chamber_count(vs)
    else:
        chambers = euler_face_count(vs, report)[2]
    if config.d == 2:
        from .census import face_census
        from .geometry import PointConfiguration

        planar = PointConfiguration.from_coords(config.points)
        triangs = face_census(planar).f_vector[0]
    elif config.d == 3:
        from ._triang3d import regular_triangulation_count

        triangs = regular_triangulation_count(config.points)
    else:
        raise SizeLimit("duality check supports d = 2 and d = 3 only")
    return DualityReport(config.n, config.d, chambers, triangs, report.generic, report.violations)
