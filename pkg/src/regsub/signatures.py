"""Link signatures, monotone polylines, extended stars and well-formed subdivisions.

Throughout, ``apex`` is a hull vertex ``A`` of a configuration in general
position and the remaining points are indexed ``P_0 = B, ..., P_{n-2} = C``
counterclockwise as seen from ``A`` (see :func:`regsub.geometry.angular_order`).
A signature has one entry per interior index ``1..n-3``; ``sigma[i-1]`` is the
sign of ``P_i``.  Polylines are increasing tuples of angular indices from 0 to
``n-2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import prod
from typing import Iterable, Sequence

from .associahedron import assoc_faces, compositions
from .errors import (ApexNotInAnyCell, GeneralPositionRequired, InvalidDelta,
                     InvariantError)
from .geometry import (Point2, PointConfiguration, ProjectiveMap, apply_projective,
                       barycentric, convex_hull, cross, in_general_position,
                       line_through, orientation, polygon_area2, segments_cross)
from .subdivision import (Cell, HeightVector, Subdivision, above_form, cell_polygon,
                          extend_cells, face_dimension, lift_subdivision,
                          secondary_cone, secondary_span_dimension)
from .linalg import nullspace
from .lp import strictly_feasible

SIGN_CHARS = {1: "+", 0: "0", -1: "-"}


@dataclass(frozen=True)
class Signature:
    entries: tuple[int, ...]
    apex: int | None = None

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if any(v not in (-1, 0, 1) for v in entries):
            raise ValueError("signature entries must be -1, 0 or +1")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str, apex: int | None = None) -> "Signature":
        table = {"+": 1, "0": 0, "-": -1}
        try:
            return cls(tuple(table[ch] for ch in text.strip()), apex)
        except KeyError as exc:
            raise ValueError(f"bad signature character {exc.args[0]!r} in {text!r}") from None

    def __str__(self) -> str:
        return "".join(SIGN_CHARS[v] for v in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def indices(self, sign: int) -> tuple[int, ...]:
        """Angular indices (1-based) carrying ``sign``."""
        return tuple(i + 1 for i, v in enumerate(self.entries) if v == sign)


def _entries(sigma) -> tuple[int, ...]:
    if isinstance(sigma, str):
        return Signature.parse(sigma).entries
    return tuple(int(v) for v in sigma)


def format_signature(sigma) -> str:
    return "".join(SIGN_CHARS[v] for v in _entries(sigma))


@dataclass(frozen=True)
class NegativeInterval:
    start: int
    end: int
    negatives: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.negatives)

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.start,) + self.negatives + (self.end,)


@dataclass(frozen=True)
class ExtendedStar:
    cells_above: tuple[Cell, ...]
    cells_below: tuple[Cell, ...]
    polyline: tuple[int, ...]
    intervals: tuple[NegativeInterval, ...]
    shelling_order: tuple[tuple[str, int], ...]

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self.cells_above + self.cells_below


@dataclass(frozen=True)
class Frame:
    """Angular bookkeeping around one apex."""

    config: PointConfiguration
    apex: int
    order: tuple[int, ...]  # labels of P_0..P_{n-2}

    @property
    def m(self) -> int:
        """Number of signature entries, ``n - 3``."""
        return len(self.order) - 2

    def point(self, idx: int) -> Point2:
        return self.config.points[self.order[idx]]

    def labels(self, idxs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.order[i] for i in idxs)


@lru_cache(maxsize=1024)
def frame(config: PointConfiguration, apex: int) -> Frame:
    if not in_general_position(config):
        raise GeneralPositionRequired("signatures need points in general position")
    from .geometry import angular_order

    _, _, order = angular_order(config, apex)
    return Frame(config, apex, order)


def _crosses(fr: Frame, i: int, l: int, r: int) -> bool:
    a = fr.config.points[fr.apex]
    return segments_cross(a, fr.point(i), fr.point(l), fr.point(r))


def polyline_signature(config: PointConfiguration, apex: int, polyline: Sequence[int]) -> tuple[int, ...]:
    """Sign vector of a monotone polyline: which points it passes above or below."""
    fr = frame(config, apex)
    verts = tuple(polyline)
    on = set(verts)
    out = []
    k = 0
    for i in range(1, fr.m + 1):
        while verts[k + 1] < i:
            k += 1
        if i in on:
            l, r = verts[k], verts[k + 2]
            out.append(1 if _crosses(fr, i, l, r) else -1)
        else:
            l, r = verts[k], verts[k + 1]
            out.append(-1 if _crosses(fr, i, l, r) else 1)
    return tuple(out)


def all_polylines(m: int):
    """All monotone polylines with ``m`` interior candidates, as index tuples."""
    for bits in product((0, 1), repeat=m):
        yield (0,) + tuple(i + 1 for i, b in enumerate(bits) if b) + (m + 1,)


@lru_cache(maxsize=1024)
def _polyline_table(config: PointConfiguration, apex: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    fr = frame(config, apex)
    table: dict[tuple[int, ...], tuple[int, ...]] = {}
    for line in all_polylines(fr.m):
        sig = polyline_signature(config, apex, line)
        if sig in table:
            raise InvariantError(f"polylines {table[sig]} and {line} share signature {sig}")
        table[sig] = line
    return table


def polyline_of_signature(config: PointConfiguration, apex: int, sigma) -> tuple[int, ...]:
    sig = _entries(sigma)
    if 0 in sig:
        raise ValueError("polyline_of_signature takes a signature without zeros")
    try:
        return _polyline_table(config, apex)[sig]
    except KeyError:
        raise InvariantError(f"no polyline has signature {format_signature(sig)}") from None


def _polyline_for(config, apex, sig: tuple[int, ...]) -> tuple[int, ...]:
    return polyline_of_signature(config, apex, tuple(1 if v == 0 else v for v in sig))


def link_signature(config: PointConfiguration, apex: int, sub: Subdivision) -> Signature:
    """Signature of the star of ``apex`` in ``sub``."""
    fr = frame(config, apex)
    pos = {lab: i for i, lab in enumerate(fr.order)}
    star = [c for c in sub.cells if apex in c]
    if not star:
        raise ApexNotInAnyCell(f"no cell of the subdivision contains label {apex}")
    joined: set[int] = set()
    verts: set[int] = set()
    for c in star:
        poly = cell_polygon(config, c)
        k = poly.index(apex)
        joined.update((poly[k - 1], poly[(k + 1) % len(poly)]))
        verts.update(pos[v] for v in poly if v != apex)
    line = tuple(sorted(verts))
    if line[0] != 0 or line[-1] != fr.m + 1:
        raise InvariantError("link of the apex does not run from B to C")
    base = polyline_signature(config, apex, line)
    on = set(line)
    used = sub.used
    out = []
    for i in range(1, fr.m + 1):
        lab = fr.order[i]
        if base[i - 1] < 0:
            out.append(-1)
        elif i in on:
            out.append(1 if lab in joined else 0)
        else:
            out.append(0 if lab in used else 1)
    return Signature(tuple(out), apex)


def star_of_signature(config: PointConfiguration, apex: int, sigma) -> list[Cell]:
    """Cells containing the apex in any subdivision with link signature ``sigma``."""
    fr = frame(config, apex)
    sig = _entries(sigma)
    line = _polyline_for(config, apex, sig)
    on = set(line)
    splits = [v for v in line if v in (0, fr.m + 1) or sig[v - 1] != 0]
    cells = []
    for s, t in zip(splits, splits[1:]):
        idxs = [v for v in line if s <= v <= t]
        idxs += [i for i in range(s + 1, t) if i not in on and sig[i - 1] == 0]
        cells.append(frozenset({apex}) | fr.labels(idxs))
    return cells


def negative_intervals(config: PointConfiguration, apex: int, sigma,
                       include_empty: bool = False) -> list[NegativeInterval]:
    """Negative intervals of ``sigma`` with respect to this configuration.

    Empty intervals (two consecutive non-negative polyline vertices with no
    negative point between them) carry no cell and are dropped unless asked for.
    """
    fr = frame(config, apex)
    sig = _entries(sigma)
    line = _polyline_for(config, apex, sig)
    nonneg = [v for v in line if v in (0, fr.m + 1) or sig[v - 1] >= 0]
    out = []
    for i, j in zip(nonneg, nonneg[1:]):
        negs = tuple(k for k in range(i + 1, j) if sig[k - 1] == -1)
        if negs or include_empty:
            out.append(NegativeInterval(i, j, negs))
    return out


def _shelling_key(kind_rank: int, idxs: Sequence[int], line: Sequence[int]):
    on = [line.index(v) for v in idxs if v in line]
    return (min(on) + max(on), min(on), kind_rank)


def extended_star(config: PointConfiguration, apex: int, sigma) -> ExtendedStar:
    fr = frame(config, apex)
    sig = _entries(sigma)
    line = _polyline_for(config, apex, sig)
    pos = {lab: i for i, lab in enumerate(fr.order)}
    above = tuple(star_of_signature(config, apex, sig))
    ivs = tuple(negative_intervals(config, apex, sig))
    below = tuple(fr.labels(iv.indices) for iv in ivs)
    keyed = [(_shelling_key(0, [pos[v] for v in c if v != apex], line), ("above", k))
             for k, c in enumerate(above)]
    keyed += [(_shelling_key(1, iv.indices, line), ("below", k)) for k, iv in enumerate(ivs)]
    order = tuple(tag for _, tag in sorted(keyed))
    return ExtendedStar(above, below, line, ivs, order)


# ---------------------------------------------------------------------------
# completion of the extended star to a regular subdivision


def _line_param(p: Point2, p2: Point2, q: Point2, q2: Point2):
    """Parameters ``(t, u)`` with ``p + t(p2-p) = q + u(q2-q)``, or None if parallel."""
    dx1, dy1 = p2.x - p.x, p2.y - p.y
    dx2, dy2 = q2.x - q.x, q2.y - q.y
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    rx, ry = q.x - p.x, q.y - p.y
    t = (rx * dy2 - ry * dx2) / den
    u = (rx * dy1 - ry * dx1) / den
    return t, u


def _hull_context(config: PointConfiguration, apex: int):
    cyc = convex_hull(config)
    k = cyc.index(apex)
    h = len(cyc)
    b, b2 = cyc[(k + 1) % h], cyc[(k + 2) % h]
    c, c2 = cyc[k - 1], cyc[k - 2]
    return b, b2, c, c2, h


def _projective_from_weight(g: Fraction, h: Fraction, i: Fraction) -> ProjectiveMap:
    for top in (((1, 0, 0), (0, 1, 0)), ((-1, 0, 0), (0, 1, 0)),
                ((1, 0, 1), (0, 1, 0)), ((1, 0, 0), (0, 1, 1)),
                ((-1, 0, 1), (0, 1, 0)), ((1, 0, 0), (0, -1, 1))):
        try:
            pm = ProjectiveMap(top + ((g, h, i),))
        except ValueError:
            continue
        if pm.determinant() > 0:
            return pm
    raise InvariantError("could not complete an orientation-preserving projective map")


def separating_projective_map(config: PointConfiguration, apex: int) -> ProjectiveMap | None:
    """A map after which lines ``BB'`` and ``CC'`` meet beyond the hull, opposite the apex.

    Returns None when no map is needed (they already do, or the hull is a
    triangle).  The line sent to infinity separates their old meeting point
    from the hull, so the meeting point reappears on the far side.
    """
    pts = config.points
    b, b2, c, c2, h = _hull_context(config, apex)
    if h == 3:
        return None
    P = _line_param(pts[b], pts[b2], pts[c], pts[c2])
    if P is not None and P[0] >= 1 and P[1] >= 1:
        return None
    if P is None:
        # parallel: send a line beyond the apex side to infinity
        d = pts[b] - pts[b2]
        top = max(d.x * p.x + d.y * p.y for p in pts)
        return _projective_from_weight(-d.x, -d.y, top + 1)
    t, _ = P
    meet = Point2(pts[b].x + t * (pts[b2].x - pts[b].x), pts[b].y + t * (pts[b2].y - pts[b].y))
    # wedge coordinates at the meeting point: X - meet = beta*(B - meet) + gamma*(C - meet)
    e1, e2 = pts[b] - meet, pts[c] - meet
    den = e1.x * e2.y - e1.y * e2.x

    def coords(p):
        r = p - meet
        return (r.x * e2.y - r.y * e2.x) / den, (e1.x * r.y - e1.y * r.x) / den

    eps = min(sum(coords(p)) for p in pts) / 2
    # weight(X) = beta(X) + gamma(X) - eps, affine in X
    g = (e2.y - e1.y) / den
    hh = (e1.x - e2.x) / den
    i0 = -(g * meet.x + hh * meet.y) - eps
    return _projective_from_weight(g, hh, i0)


def _auxiliary_point(config: PointConfiguration, apex: int) -> Point2 | None:
    """The point ``D`` making ``A B D C`` a convex quadrilateral around the hull."""
    pts = config.points
    b, b2, c, c2, h = _hull_context(config, apex)
    a = pts[apex]
    if h == 3:
        d = Point2(pts[b].x + pts[c].x - a.x, pts[b].y + pts[c].y - a.y)
    else:
        P = _line_param(pts[b], pts[b2], pts[c], pts[c2])
        if P is None or not (P[0] >= 1 and P[1] >= 1):
            return None
        t = P[0]
        meet = Point2(pts[b].x + t * (pts[b2].x - pts[b].x), pts[b].y + t * (pts[b2].y - pts[b].y))
        d = Point2(a.x + 2 * (meet.x - a.x), a.y + 2 * (meet.y - a.y))
    quad = (a, pts[b], d, pts[c])
    for k in range(4):
        if orientation(quad[k], quad[(k + 1) % 4], quad[(k + 2) % 4]) <= 0:
            return None
    for p in pts:
        for k in range(4):
            if orientation(quad[k], quad[(k + 1) % 4], p) < 0:
                return None
    return d


def _propagate(config: PointConfiguration, apex: int, sig, cells, first: int):
    """Coplanar height propagation over the cells of ``S'`` (label ``-1`` is ``D``)."""
    pts = {i: p for i, p in enumerate(config.points)}
    pts[-1] = _auxiliary_point(config, apex)
    if pts[-1] is None:
        return None
    fr = frame(config, apex)
    heights: dict[int, Fraction] = {apex: Fraction(0), fr.order[0]: Fraction(0),
                                    -1: Fraction(0), first: Fraction(-1)}
    todo = list(cells)
    while todo:
        for k, cell in enumerate(todo):
            known = [v for v in sorted(cell) if v in heights]
            tri = next((t for t in combinations(known, 3)
                        if cross(*(pts[v] for v in t)) != 0), None)
            if tri is None:
                continue
            a, b, c = (pts[v] for v in tri)
            for v in cell:
                la, lb, lc = barycentric(a, b, c, pts[v])
                val = la * heights[tri[0]] + lb * heights[tri[1]] + lc * heights[tri[2]]
                if v in heights:
                    if heights[v] != val:
                        return None
                else:
                    heights[v] = val
            del todo[k]
            break
        else:
            return None
    return heights


def _complete_constructive(config: PointConfiguration, apex: int, sig: tuple[int, ...]):
    fr = frame(config, apex)
    line = _polyline_for(config, apex, sig)
    on = set(line)
    pos_on_line = [v for v in line[1:-1] if sig[v - 1] == 1]
    unused_above = [i for i in range(1, fr.m + 1) if i not in on and sig[i - 1] == 1]
    phase1 = tuple(0 if (i + 1 in on and v == 1) else v for i, v in enumerate(sig))

    pmap = separating_projective_map(config, apex)
    work = config if pmap is None else apply_projective(pmap, config)
    if pmap is not None:
        weights = [pmap.weight(p) for p in config.points]
        if any(w <= 0 for w in weights):
            return None
    above = star_of_signature(work, apex, phase1)
    below = [fr.labels(iv.indices) | {-1}
             for iv in negative_intervals(work, apex, phase1, include_empty=True)]
    first = fr.order[line[1]]
    h = _propagate(work, apex, phase1, above + below, first)
    if h is None:
        return None
    used = set().union(*above, *below) - {-1}
    alpha = [Fraction(0)] * config.n
    for v in used:
        alpha[v] = h[v] if pmap is None else h[v] * weights[v]
    big = 1 + max(alpha[v] for v in used)
    for i in unused_above:
        alpha[fr.order[i]] = big
    levels = [tuple(alpha)]
    a = config.points[apex]
    for i in pos_on_line:
        la, lb, lc = line_through(a, fr.point(i))
        levels.append(tuple(abs(la * p.x + lb * p.y + lc) for p in config.points))
    return HeightVector(tuple(levels))


def complete_extended_star(config: PointConfiguration, apex: int, sigma,
                           method: str = "auto") -> tuple[HeightVector, Subdivision]:
    """Heights whose regular subdivision contains every cell of the extended star.

    ``method="constructive"`` follows the explicit lifting (auxiliary point,
    coplanar propagation, then one infinitesimal fold per positive polyline
    vertex) and raises if it does not produce the star; ``"lp"`` solves for the
    heights directly; ``"auto"`` tries the construction first.
    """
    sig = _entries(sigma)
    star = extended_star(config, apex, sig)
    if method in ("auto", "constructive"):
        hv = _complete_constructive(config, apex, sig)
        if hv is not None:
            sub = lift_subdivision(config, hv)
            if all(c in sub.cells for c in star.cells):
                return hv, sub
        if method == "constructive":
            raise InvariantError(f"explicit completion failed for {format_signature(sig)}")
    hv = extend_cells(config, star.cells)
    if hv is None:
        raise InvariantError(f"extended star of {format_signature(sig)} does not extend")
    sub = lift_subdivision(config, hv)
    if not all(c in sub.cells for c in star.cells):
        raise InvariantError("linear program returned heights that lose a star cell")
    return hv, sub


# ---------------------------------------------------------------------------
# well-formed subdivisions and the lower bounds


def valid_deltas(lengths: Sequence[int]):
    """All dimension vectors with ``0 <= delta_i < length_i``."""
    return product(*(range(m) for m in lengths))


def _check_delta(lengths: Sequence[int], delta: Sequence[int]) -> tuple[int, ...]:
    delta = tuple(int(d) for d in delta)
    if len(delta) != len(lengths):
        raise InvalidDelta(f"need {len(lengths)} entries in delta, got {len(delta)}")
    for d, m in zip(delta, lengths):
        if not 0 <= d < m:
            raise InvalidDelta(f"delta entry {d} outside 0..{m - 1}")
    return delta


def _fan(config: PointConfiguration, cell: Cell) -> list[Cell]:
    poly = cell_polygon(config, cell)
    return [frozenset((poly[0], poly[k], poly[k + 1])) for k in range(1, len(poly) - 1)]


def _local_cone(config: PointConfiguration, region: Cell, pieces: Sequence[Cell]):
    """Forms saying a height vector restricted to ``region`` induces ``pieces``."""
    sub_cfg, labels = config.subconfiguration(region)
    back = {k: lab for k, lab in enumerate(labels)}
    fwd = {lab: k for k, lab in enumerate(labels)}
    local = Subdivision.from_cells(([fwd[v] for v in c] for c in pieces), len(labels))
    cone = secondary_cone(sub_cfg, local)

    def globalize(form):
        row = [0] * config.n
        for k, v in enumerate(form):
            row[back[k]] += v
        return tuple(row)

    return [globalize(f) for f in cone.equalities], [globalize(f) for f in cone.strict_inequalities]


def subdivision_restricted(config: PointConfiguration, sub: Subdivision, region: Iterable[int]):
    """``(subconfiguration, labels, local subdivision)`` for the cells inside ``region``."""
    sub_cfg, labels = config.subconfiguration(region)
    fwd = {lab: k for k, lab in enumerate(labels)}
    cells = [[fwd[v] for v in c] for c in sub.cells_within(labels)]
    return sub_cfg, labels, Subdivision.from_cells(cells, len(labels))


def build_well_formed(config: PointConfiguration, apex: int, sigma, delta: Sequence[int],
                      cell_subdivisions: Sequence[Subdivision]) -> Subdivision:
    """A regular subdivision with extended signature ``(sigma, delta)``.

    ``cell_subdivisions[i]`` is a regular subdivision of the ``i``-th cell below
    the polyline, written in global labels, of dimension ``delta[i]``.
    """
    sig = _entries(sigma)
    star = extended_star(config, apex, sig)
    delta = _check_delta([iv.length for iv in star.intervals], delta)
    if len(cell_subdivisions) != len(star.cells_below):
        raise InvalidDelta("need one subdivision per cell below the polyline")
    for cell, sub, d in zip(star.cells_below, cell_subdivisions, delta):
        if not all(c <= cell for c in sub.cells):
            raise ValueError(f"subdivision {sub!r} leaves the cell {sorted(cell)}")
        sub_cfg, labels, local = subdivision_restricted(config, sub, cell)
        if face_dimension(sub_cfg, local) != d:
            raise InvalidDelta(f"subdivision of {sorted(cell)} does not have dimension {d}")

    alpha, base = complete_extended_star(config, apex, sig)
    # only the star cells are prescribed; uncovered regions are left to a generic level
    pieces_of = [(c, [c]) for c in star.cells_above]
    pieces_of += [(c, list(s.cells)) for c, s in zip(star.cells_below, cell_subdivisions)]
    eqs: set[tuple[int, ...]] = set()
    strict: set[tuple[int, ...]] = set()
    for cell, pieces in pieces_of:
        e, s = _local_cone(config, cell, pieces)
        eqs.update(e)
        strict.update(s)
    eqs_sorted = sorted(eqs)
    omega = strictly_feasible(sorted(strict), config.n, eqs_sorted)
    if omega is None:
        raise InvariantError("no refinement realizes the requested cell subdivisions")
    wanted = [p for _, pieces in pieces_of for p in pieces]
    expected = len(Signature(sig).indices(0)) + sum(delta)
    free = nullspace([list(e) for e in eqs_sorted], config.n) if eqs_sorted else \
        [[Fraction(int(i == j)) for i in range(config.n)] for j in range(config.n)]
    got = None
    for attempt in range(_GENERIC_ATTEMPTS):
        gamma = _generic_combination(free, config.n, attempt)
        result = lift_subdivision(config, alpha.refined(HeightVector.of(omega, gamma)))
        if not all(p in result.cells for p in wanted):
            raise InvariantError("refinement lost a prescribed cell")
        got = config.n - secondary_span_dimension(config, result)
        if got == expected:
            return result
    raise InvariantError(f"well-formed subdivision has dimension {got}, expected {expected}")


_GENERIC_ATTEMPTS = 8
_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79)


def _generic_combination(basis, n: int, attempt: int) -> list[Fraction]:
    """A deterministic, combinatorially generic element of the span of ``basis``."""
    out = [Fraction(0)] * n
    for k, vec in enumerate(basis):
        c = Fraction(1, _PRIMES[(k + attempt) % len(_PRIMES)] ** (1 + attempt % 3)) * (-1) ** (k * attempt)
        for i, v in enumerate(vec):
            out[i] += c * v
    return out


def signature_lower_bound(config: PointConfiguration, apex: int, sigma, delta: Sequence[int]) -> int:
    lengths = [iv.length for iv in negative_intervals(config, apex, sigma)]
    delta = _check_delta(lengths, delta)
    return prod(assoc_faces(m, d) for m, d in zip(lengths, delta))


def run_lengths(sigma) -> list[int]:
    """Lengths of the maximal runs of -1 (the negative intervals in convex position)."""
    out, run = [], 0
    for v in _entries(sigma):
        if v == -1:
            run += 1
        else:
            if run:
                out.append(run)
            run = 0
    if run:
        out.append(run)
    return out


def convex_exact_count(sigma, delta: Sequence[int]) -> int:
    """Number of subdivisions of a convex polygon with extended signature ``(sigma, delta)``."""
    lengths = run_lengths(sigma)
    delta = _check_delta(lengths, delta)
    return prod(assoc_faces(m, d) for m, d in zip(lengths, delta))


def _runs_with_positions(sig: Sequence[int]) -> list[tuple[int, ...]]:
    runs, cur = [], []
    for i, v in enumerate(sig, start=1):
        if v == -1:
            cur.append(i)
        elif cur:
            runs.append(tuple(cur))
            cur = []
    if cur:
        runs.append(tuple(cur))
    return runs


def convex_count_mapped(config: PointConfiguration, apex: int, sigma, delta: Sequence[int]) -> int:
    """Convex-position subdivisions whose extended signature groups into ``(sigma, delta)``.

    The negative runs of ``sigma`` in convex position refine the negative
    intervals in ``config``; a convex dimension vector maps to ``delta`` by
    summing over the runs inside each interval.
    """
    sig = _entries(sigma)
    ivs = negative_intervals(config, apex, sig)
    delta = _check_delta([iv.length for iv in ivs], delta)
    runs = _runs_with_positions(sig)
    total = 1
    for iv, d in zip(ivs, delta):
        mine = [len(r) for r in runs if set(r) <= set(iv.negatives)]
        if sum(mine) != iv.length:
            raise InvariantError("convex runs do not refine the negative intervals")
        total *= sum(prod(assoc_faces(m, g) for m, g in zip(mine, gam))
                     for gam in compositions(d, mine))
    return total


def extended_signature(config: PointConfiguration, apex: int, sub: Subdivision):
    """``(sigma, delta)`` when ``sub`` is well-formed, otherwise None.

    ``sub`` is assumed regular.
    """
    sigma = link_signature(config, apex, sub)
    ivs = negative_intervals(config, apex, sigma)
    fr = frame(config, apex)
    pts = config.points
    delta = []
    for iv in ivs:
        region = fr.labels(iv.indices)
        sub_cfg, labels, local = subdivision_restricted(config, sub, region)
        area = sum((polygon_area2(pts, cell_polygon(config, c)) for c in sub.cells_within(region)),
                   Fraction(0))
        if area != polygon_area2(pts, cell_polygon(config, region)):
            return None
        delta.append(face_dimension(sub_cfg, local, check=False))
    dim = config.n - secondary_span_dimension(config, sub)
    if dim != len(sigma.indices(0)) + sum(delta):
        return None
    return sigma, tuple(delta)


def radial_convexification(config: PointConfiguration, apex: int) -> PointConfiguration:
    """Push every point outward along its ray from the apex onto a circle through the apex.

    Already-convex inputs are returned unchanged.
    """
    cyc = convex_hull(config)
    if len(cyc) == config.n:
        return config
    fr = frame(config, apex)
    pts = config.points
    a = pts[apex]
    b, c = fr.point(0) - a, fr.point(fr.m + 1) - a
    # v has positive inner product with every direction in the cone at the apex
    v = Point2(-b.y + c.y, b.x - c.x)
    scale = Fraction(0)
    for i in config.labels:
        if i == apex:
            continue
        u = pts[i] - a
        scale = max(scale, (u.x * u.x + u.y * u.y) / (2 * (u.x * v.x + u.y * v.y)))
    radius = scale + 1
    out = []
    for i, p in enumerate(pts):
        if i == apex:
            out.append(p)
            continue
        u = p - a
        t = 2 * radius * (u.x * v.x + u.y * v.y) / (u.x * u.x + u.y * u.y)
        out.append(Point2(a.x + t * u.x, a.y + t * u.y))
    return PointConfiguration(tuple(out))
