"""Exact planar primitives over the rationals.

Everything here works on :class:`fractions.Fraction` coordinates; there is no
floating point anywhere, so every predicate returns the true sign.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import (DegenerateHull, DuplicatePoint, NotHullVertex,
                     PointAtInfinity, TiedAngles)


def as_rational(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: a float almost never means the rational the user
    had in mind.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


class Point2(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point2":
        return cls(as_rational(x), as_rational(y))

    def __sub__(self, other):  # type: ignore[override]
        return Point2(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class PointConfiguration:
    """Labeled planar points; the label of a point is its index in ``points``."""

    points: tuple[Point2, ...]

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point2) and isinstance(p.x, Fraction)
                    and isinstance(p.y, Fraction) else Point2.of(*p)
                    for p in self.points)
        object.__setattr__(self, "points", pts)
        seen: dict[Point2, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise DuplicatePoint(f"points {seen[p]} and {i} coincide at {_fmt(p)}")
            seen[p] = i

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence]) -> "PointConfiguration":
        return cls(tuple(Point2.of(*c) for c in coords))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(len(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, label: int) -> Point2:
        return self.points[label]

    def subconfiguration(self, labels: Iterable[int]) -> tuple["PointConfiguration", tuple[int, ...]]:
        """Return the points with the given labels and the old labels in new order."""
        labels = tuple(sorted(labels))
        return PointConfiguration(tuple(self.points[i] for i in labels)), labels


def _fmt(p: Point2) -> str:
    return f"({p.x}, {p.y})"


def cross(o: Point2, a: Point2, b: Point2) -> Fraction:
    """Twice the signed area of triangle ``o a b``."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point2, q: Point2, r: Point2) -> int:
    """+1 if ``p q r`` turn counterclockwise, -1 if clockwise, 0 if collinear."""
    d = cross(p, q, r)
    return (d > 0) - (d < 0)


def in_general_position(config: PointConfiguration) -> bool:
    pts = config.points
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if cross(pts[i], pts[j], pts[k]) == 0:
                    return False
    return True


def _hull_indices(pts: Sequence[Point2], labels: Sequence[int]) -> list[int]:
    order = sorted(labels, key=lambda i: (pts[i].x, pts[i].y))
    if len(order) < 3:
        return list(order)

    def half(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and cross(pts[chain[-2]], pts[chain[-1]], pts[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]


def hull_of(pts: Sequence[Point2], labels: Iterable[int] | None = None) -> tuple[int, ...]:
    """Counterclockwise extreme points of a subset, starting at the lexicographic minimum.

    Collinear boundary points are dropped. Degenerate inputs (fewer than three
    extreme points) are returned as-is, without raising.
    """
    if labels is None:
        labels = range(len(pts))
    return tuple(_hull_indices(pts, list(labels)))


@lru_cache(maxsize=4096)
def convex_hull(config: PointConfiguration) -> tuple[int, ...]:
    """Labels of the hull vertices of ``config`` in counterclockwise order.

    Raises :class:`DegenerateHull` when all points are collinear.
    """
    if config.n < 3:
        raise DegenerateHull("need at least three points")
    cycle = hull_of(config.points)
    if len(cycle) < 3:
        raise DegenerateHull("all points are collinear")
    return cycle


def hull_boundary_points(config: PointConfiguration) -> tuple[int, ...]:
    """Labels lying on the hull boundary without being hull vertices."""
    cycle = convex_hull(config)
    pts = config.points
    vertices = set(cycle)
    out = []
    for i in config.labels:
        if i in vertices:
            continue
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if cross(pts[a], pts[b], pts[i]) == 0:
                out.append(i)
                break
    return tuple(out)


def polygon_area2(pts: Sequence[Point2], cycle: Sequence[int]) -> Fraction:
    """Twice the signed area of the polygon visiting ``cycle``."""
    total = Fraction(0)
    m = len(cycle)
    for k in range(m):
        p, q = pts[cycle[k]], pts[cycle[(k + 1) % m]]
        total += p.x * q.y - p.y * q.x
    return total


def hull_area2(config: PointConfiguration) -> Fraction:
    return polygon_area2(config.points, convex_hull(config))


def in_closed_triangle(a: Point2, b: Point2, c: Point2, p: Point2) -> bool:
    s = orientation(a, b, c)
    return (orientation(a, b, p) * s >= 0 and orientation(b, c, p) * s >= 0
            and orientation(c, a, p) * s >= 0)


def in_convex_polygon(pts: Sequence[Point2], cycle: Sequence[int], p: Point2) -> int:
    """Locate ``p`` relative to a counterclockwise convex polygon.

    Returns 1 for the interior, 0 for the boundary, -1 for the exterior.
    """
    on_edge = False
    m = len(cycle)
    for k in range(m):
        o = orientation(pts[cycle[k]], pts[cycle[(k + 1) % m]], p)
        if o < 0:
            return -1
        if o == 0:
            on_edge = True
    return 0 if on_edge else 1


def barycentric(a: Point2, b: Point2, c: Point2, p: Point2) -> tuple[Fraction, Fraction, Fraction]:
    """Affine coordinates of ``p`` with respect to the triangle ``a b c``."""
    det = cross(a, b, c)
    if det == 0:
        raise ValueError("degenerate triangle")
    la = cross(p, b, c) / det
    lb = cross(a, p, c) / det
    return la, lb, 1 - la - lb


def line_through(p: Point2, q: Point2) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients ``(a, b, c)`` with ``a x + b y + c`` positive left of ``p -> q``."""
    a = p.y - q.y
    b = q.x - p.x
    c = -(a * p.x + b * p.y)
    return a, b, c


def segments_cross(p: Point2, q: Point2, r: Point2, s: Point2) -> bool:
    """True if the closed segments ``pq`` and ``rs`` share at least one point."""
    o1, o2 = orientation(p, q, r), orientation(p, q, s)
    o3, o4 = orientation(r, s, p), orientation(r, s, q)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True

    def on_segment(a, b, c):
        return (min(a.x, b.x) <= c.x <= max(a.x, b.x)
                and min(a.y, b.y) <= c.y <= max(a.y, b.y))

    return ((o1 == 0 and on_segment(p, q, r)) or (o2 == 0 and on_segment(p, q, s))
            or (o3 == 0 and on_segment(r, s, p)) or (o4 == 0 and on_segment(r, s, q)))


@lru_cache(maxsize=4096)
def angular_order(config: PointConfiguration, apex: int) -> tuple[int, int, tuple[int, ...]]:
    """Hull neighbors ``(B, C)`` of ``apex`` and the other labels sorted around it.

    The list runs counterclockwise as seen from the apex, starting at ``B`` and
    ending at ``C``; index ``i`` in it is the point called ``P_i``.
    """
    cycle = convex_hull(config)
    if apex not in cycle:
        raise NotHullVertex(f"label {apex} is not a vertex of the convex hull")
    k = cycle.index(apex)
    b = cycle[(k + 1) % len(cycle)]
    c = cycle[k - 1]
    pts = config.points
    a = pts[apex]

    def cmp(i, j):
        o = orientation(a, pts[i], pts[j])
        if o == 0:
            raise TiedAngles(f"labels {i} and {j} are collinear with apex {apex}")
        return -o

    rest = sorted((i for i in config.labels if i != apex), key=cmp_to_key(cmp))
    if rest[0] != b or rest[-1] != c:
        raise TiedAngles("hull neighbors are not angular extremes")
    return b, c, tuple(rest)


@dataclass(frozen=True)
class ProjectiveMap:
    """A projective transformation of the plane in homogeneous coordinates."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(as_rational(v) for v in row) for row in self.matrix)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("projective map needs a 3x3 matrix")
        object.__setattr__(self, "matrix", m)
        if self.determinant() == 0:
            raise ValueError("singular projective map")

    @classmethod
    def identity(cls) -> "ProjectiveMap":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def determinant(self) -> Fraction:
        (a, b, c), (d, e, f), (g, h, i) = self.matrix
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def weight(self, p: Point2) -> Fraction:
        """Homogenizing coordinate of the image of ``p``."""
        g, h, i = self.matrix[2]
        return g * p.x + h * p.y + i

    def __call__(self, p: Point2) -> Point2:
        (a, b, c), (d, e, f), _ = self.matrix
        w = self.weight(p)
        if w == 0:
            raise PointAtInfinity(f"{_fmt(p)} is sent to the line at infinity")
        return Point2((a * p.x + b * p.y + c) / w, (d * p.x + e * p.y + f) / w)


def apply_projective(pmap: ProjectiveMap, config: PointConfiguration) -> PointConfiguration:
    return PointConfiguration(tuple(pmap(p) for p in config.points))
