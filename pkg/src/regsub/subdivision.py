"""Regular subdivisions: lifting, validation, regularity certificates, face dimension.

Cells are combinatorial: a cell is a frozenset of labels, which may include
points that lie inside ``conv(cell)`` without being vertices of it.  Points
that belong to no cell are *unused*.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvariantError, NotRegular
from .geometry import (Point2, PointConfiguration, as_rational, barycentric, cross,
                       hull_area2, hull_of, in_closed_triangle, orientation,
                       polygon_area2)
from .linalg import primitive, rank
from .lp import strictly_feasible

Cell = frozenset  # frozenset[int] of point labels


@dataclass(frozen=True)
class HeightVector:
    """Heights ``levels[0] + e*levels[1] + e^2*levels[2] + ...`` for a formal infinitesimal e > 0.

    A single level is an ordinary lifting vector.  Further levels are compared
    lexicographically, which realizes "for all sufficiently small e" exactly.
    """

    levels: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        levels = tuple(tuple(as_rational(v) for v in lv) for lv in self.levels)
        if not levels:
            raise ValueError("a height vector needs at least one level")
        if len({len(lv) for lv in levels}) != 1:
            raise DimensionMismatch("all levels must have the same length")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def of(cls, values: Sequence, *perturbations: Sequence) -> "HeightVector":
        return cls((tuple(values),) + tuple(tuple(p) for p in perturbations))

    @classmethod
    def coerce(cls, heights) -> "HeightVector":
        if isinstance(heights, HeightVector):
            return heights
        return cls.of(heights)

    @property
    def n(self) -> int:
        return len(self.levels[0])

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, label: int) -> tuple[Fraction, ...]:
        return tuple(lv[label] for lv in self.levels)

    def refined(self, other) -> "HeightVector":
        """Append ``other`` as infinitesimally smaller levels."""
        other = HeightVector.coerce(other)
        if other.n != self.n:
            raise DimensionMismatch(f"{other.n} heights for {self.n} points")
        return HeightVector(self.levels + other.levels)


@dataclass(frozen=True)
class Subdivision:
    cells: frozenset[Cell]
    unused: frozenset[int] = field(default=frozenset())

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]], n: int) -> "Subdivision":
        cells = frozenset(frozenset(c) for c in cells)
        used = set().union(*cells) if cells else set()
        return cls(cells, frozenset(range(n)) - used)

    @classmethod
    def trivial(cls, n: int) -> "Subdivision":
        return cls(frozenset([frozenset(range(n))]), frozenset())

    def sorted_cells(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(c)) for c in self.cells)

    @property
    def used(self) -> frozenset[int]:
        return frozenset().union(*self.cells) if self.cells else frozenset()

    def is_triangulation(self) -> bool:
        return all(len(c) == 3 for c in self.cells)

    def cells_within(self, labels: Iterable[int]) -> list[Cell]:
        labels = set(labels)
        return [c for c in self.cells if c <= labels]

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.sorted_cells()],
                "unused": sorted(self.unused)}

    @classmethod
    def from_json(cls, data: dict, n: int | None = None) -> "Subdivision":
        cells = frozenset(frozenset(int(v) for v in c) for c in data["cells"])
        if n is not None:
            return cls.from_cells(cells, n)
        return cls(cells, frozenset(int(v) for v in data.get("unused", ())))

    def __repr__(self) -> str:
        return f"Subdivision(cells={self.sorted_cells()}, unused={sorted(self.unused)})"


@dataclass(frozen=True)
class SecondaryCone:
    """Linear description of the open secondary cone of a subdivision.

    Every form is an integer vector indexed by labels; ``equalities`` must
    vanish and ``strict_inequalities`` must be positive at a lifting vector
    inducing the subdivision.
    """

    n: int
    equalities: tuple[tuple[int, ...], ...]
    strict_inequalities: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RegularityCertificate:
    regular: bool
    witness: HeightVector | None = None

    @property
    def verdict(self) -> str:
        return "regular" if self.regular else "not_regular"


@dataclass(frozen=True)
class Violation:
    kind: str  # labels | dimension | covering | proper_intersection | unused
    detail: str


@lru_cache(maxsize=1 << 16)
def cell_polygon(config: PointConfiguration, cell: Cell) -> tuple[int, ...]:
    """Counterclockwise vertex cycle (extreme members) of a cell."""
    return hull_of(config.points, cell)


def _level_sign(diffs: Iterable[Fraction]) -> int:
    for d in diffs:
        if d:
            return 1 if d > 0 else -1
    return 0


def lift_subdivision(config: PointConfiguration, heights) -> Subdivision:
    """The regular subdivision whose cells are the lower facets of the lifted points."""
    hv = HeightVector.coerce(heights)
    n = config.n
    if hv.n != n:
        raise DimensionMismatch(f"{hv.n} heights for {n} points")
    pts = config.points
    levels = hv.levels
    cells: set[Cell] = set()
    for i, j, k in combinations(range(n), 3):
        if any(i in c and j in c and k in c for c in cells):
            continue
        det = cross(pts[i], pts[j], pts[k])
        if det == 0:
            continue
        pi, pj, pk = pts[i], pts[j], pts[k]
        members = [i, j, k]
        lower = True
        for p in range(n):
            if p == i or p == j or p == k:
                continue
            q = pts[p]
            la = cross(q, pj, pk) / det
            lb = cross(pi, q, pk) / det
            lc = 1 - la - lb
            s = _level_sign(lv[p] - la * lv[i] - lb * lv[j] - lc * lv[k] for lv in levels)
            if s < 0:
                lower = False
                break
            if s == 0:
                members.append(p)
        if lower:
            cells.add(frozenset(members))
    return Subdivision.from_cells(cells, n)


def _proper_pair(config: PointConfiguration, ci: Cell, cj: Cell) -> str | None:
    """None if the two cells intersect properly, else a reason."""
    pts = config.points
    pi, pj = cell_polygon(config, ci), cell_polygon(config, cj)
    for poly, other, cell, ocell in ((pi, pj, ci, cj), (pj, pi, cj, ci)):
        m = len(poly)
        for k in range(m):
            a, b = pts[poly[k]], pts[poly[(k + 1) % m]]
            if all(orientation(a, b, pts[q]) <= 0 for q in other):
                return _check_face(pts, a, b, other, cell, ocell)
    return "interiors overlap"


def _check_face(pts, a: Point2, b: Point2, other: Sequence[int], cell: Cell, ocell: Cell) -> str | None:
    dx, dy = b.x - a.x, b.y - a.y

    def t(p):
        return (p.x - a.x) * dx + (p.y - a.y) * dy

    hi = dx * dx + dy * dy
    on = sorted(t(pts[q]) for q in other if orientation(a, b, pts[q]) == 0)
    if not on:
        return None
    q_lo, q_hi = on[0], on[-1]
    lo, up = max(Fraction(0), q_lo), min(hi, q_hi)
    if lo > up:
        return None
    if lo == up:
        if lo not in (0, hi) or lo not in (q_lo, q_hi):
            return "cells touch in a point that is not a common vertex"
    elif (lo, up) != (0, hi) or (lo, up) != (q_lo, q_hi):
        return "shared boundary is not a common edge"

    def members_on(c):
        return {p for p in c if orientation(a, b, pts[p]) == 0 and lo <= t(pts[p]) <= up}

    if members_on(cell) != members_on(ocell):
        return "cells disagree on which points of their common face are used"
    return None


def validate_subdivision(config: PointConfiguration, sub: Subdivision) -> list[Violation]:
    """Check the three defining conditions of a polyhedral subdivision; [] means valid."""
    n = config.n
    out: list[Violation] = []
    bad = [v for c in sub.cells for v in c if not 0 <= v < n] + [v for v in sub.unused if not 0 <= v < n]
    if bad:
        return [Violation("labels", f"labels out of range: {sorted(set(bad))}")]
    if sub.unused != frozenset(range(n)) - sub.used:
        out.append(Violation("unused", "unused set is not the complement of the cell members"))
    pts = config.points
    good = []
    for c in sub.cells:
        if len(c) < 3 or len(cell_polygon(config, c)) < 3:
            out.append(Violation("dimension", f"cell {sorted(c)} is not 2-dimensional"))
        else:
            good.append(c)
    good.sort(key=lambda c: sorted(c))
    for ci, cj in combinations(good, 2):
        why = _proper_pair(config, ci, cj)
        if why:
            out.append(Violation("proper_intersection", f"{sorted(ci)} vs {sorted(cj)}: {why}"))
    area = sum((polygon_area2(pts, cell_polygon(config, c)) for c in good), Fraction(0))
    if area != hull_area2(config):
        out.append(Violation("covering", f"cells cover area {area / 2}, hull has {hull_area2(config) / 2}"))
    return out


def refines(t: Subdivision, s: Subdivision) -> bool:
    return all(any(c <= d for d in s.cells) for c in t.cells)


def _interp_form(n: int, target: int, tri: tuple[int, int, int], coeffs) -> list[Fraction]:
    row = [Fraction(0)] * n
    row[target] += 1
    for v, lam in zip(tri, coeffs):
        row[v] -= lam
    return row


def _cell_frame(config: PointConfiguration, cell: Cell) -> tuple[int, int, int]:
    poly = cell_polygon(config, cell)
    return poly[0], poly[1], poly[2]


def coplanarity_forms(config: PointConfiguration, cell: Cell) -> list[tuple[int, ...]]:
    """Affine dependences forcing the members of ``cell`` onto one plane."""
    pts = config.points
    tri = _cell_frame(config, cell)
    a, b, c = (pts[v] for v in tri)
    forms = []
    for p in sorted(cell):
        if p in tri:
            continue
        lam = barycentric(a, b, c, pts[p])
        forms.append(primitive(_interp_form(config.n, p, tri, lam)))
    return forms


def above_form(config: PointConfiguration, target: int, tri: tuple[int, int, int]) -> tuple[int, ...]:
    """Form positive iff ``target`` lifts strictly above the plane through ``tri``."""
    pts = config.points
    lam = barycentric(*(pts[v] for v in tri), pts[target])
    return primitive(_interp_form(config.n, target, tri, lam), canonical_sign=False)


def _edges(config: PointConfiguration, cell: Cell):
    poly = cell_polygon(config, cell)
    m = len(poly)
    for k in range(m):
        yield poly[k], poly[(k + 1) % m], poly[(k + 2) % m]


def _containing_triangle(config: PointConfiguration, cell: Cell, p: int) -> tuple[int, int, int] | None:
    pts = config.points
    poly = cell_polygon(config, cell)
    for k in range(1, len(poly) - 1):
        tri = (poly[0], poly[k], poly[k + 1])
        if in_closed_triangle(*(pts[v] for v in tri), pts[p]):
            return tri
    return None


def secondary_cone(config: PointConfiguration, sub: Subdivision) -> SecondaryCone:
    n = config.n
    eqs: set[tuple[int, ...]] = set()
    for c in sub.cells:
        eqs.update(coplanarity_forms(config, c))
    # one strict form per interior wall: the far vertex of the neighbour lifts above
    edge_owner: dict[tuple[int, int], tuple[Cell, int]] = {}
    for c in sub.cells:
        for a, b, nxt in _edges(config, c):
            edge_owner[(a, b)] = (c, nxt)
    strict: set[tuple[int, ...]] = set()
    for (a, b), (c, nxt) in edge_owner.items():
        other = edge_owner.get((b, a))
        if other is None or a > b:
            continue
        q = other[1]
        strict.add(above_form(config, q, (a, b, nxt)))
    pts = config.points
    for u in sorted(sub.unused):
        for c in sorted(sub.cells, key=sorted):
            tri = _containing_triangle(config, c, u)
            if tri is not None:
                strict.add(above_form(config, u, tri))
                break
    return SecondaryCone(n, tuple(sorted(eqs)), tuple(sorted(strict)))


def secondary_span_dimension(config: PointConfiguration, sub: Subdivision) -> int:
    """Dimension of the space of lifting vectors that are affine on every cell."""
    eqs = secondary_cone(config, sub).equalities
    return config.n - rank(eqs, config.n)


def is_regular(config: PointConfiguration, sub: Subdivision) -> RegularityCertificate:
    cone = secondary_cone(config, sub)
    y = strictly_feasible(cone.strict_inequalities, cone.n, cone.equalities)
    if y is None:
        return RegularityCertificate(False)
    witness = HeightVector.of(y)
    if lift_subdivision(config, witness) != sub:
        raise InvariantError(f"regularity witness does not reproduce {sub!r}")
    return RegularityCertificate(True, witness)


def face_dimension(config: PointConfiguration, sub: Subdivision, *, check: bool = True) -> int:
    """Dimension of the face of the secondary polytope that corresponds to ``sub``."""
    if check and not is_regular(config, sub).regular:
        raise NotRegular(f"{sub!r} is not regular")
    return config.n - secondary_span_dimension(config, sub)


def refine_with(config: PointConfiguration, alpha, omega) -> Subdivision:
    """Subdivision for ``alpha + e*omega`` with e infinitesimal."""
    alpha = HeightVector.coerce(alpha)
    omega = HeightVector.coerce(omega)
    if alpha.n != config.n or omega.n != config.n:
        raise DimensionMismatch("height vectors must have one entry per point")
    return lift_subdivision(config, alpha.refined(omega))


def extend_cells(config: PointConfiguration, cells: Iterable[Iterable[int]]) -> HeightVector | None:
    """Heights whose lift contains every given cell, or None if no such heights exist.

    Each cell must lift to a plane with every non-member strictly above it.
    """
    n = config.n
    eqs: set[tuple[int, ...]] = set()
    strict: set[tuple[int, ...]] = set()
    for c in cells:
        c = frozenset(c)
        eqs.update(coplanarity_forms(config, c))
        tri = _cell_frame(config, c)
        for q in range(n):
            if q not in c:
                strict.add(above_form(config, q, tri))
    y = strictly_feasible(sorted(strict), n, sorted(eqs))
    return None if y is None else HeightVector.of(y)
