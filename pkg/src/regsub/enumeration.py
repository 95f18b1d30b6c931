"""Exhaustive enumeration of polyhedral subdivisions by edge-anchored exact cover.

Every subdivision is produced exactly once: the cell on the interior side of
the first hull segment is unique, and afterwards every unmatched interior edge
has a unique cell on its other side.  We always extend the smallest unmatched
edge, so the search tree is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import SizeLimit
from .geometry import PointConfiguration, convex_hull, hull_of, in_convex_polygon, orientation
from .subdivision import Cell, Subdivision, _proper_pair

DEFAULT_LIMIT = 9


@dataclass(frozen=True)
class Candidate:
    cell: Cell
    polygon: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # counterclockwise, interior edges only


def _subsets(items):
    for r in range(len(items) + 1):
        yield from combinations(items, r)


@lru_cache(maxsize=64)
def candidate_cells(config: PointConfiguration) -> tuple[Candidate, ...]:
    """All combinatorial cells: a vertex set in convex position plus any covered points."""
    pts = config.points
    n = config.n
    out = []
    for r in range(3, n + 1):
        for vs in combinations(range(n), r):
            poly = hull_of(pts, vs)
            if len(poly) != r:
                continue
            inside = [p for p in range(n) if p not in vs and in_convex_polygon(pts, poly, pts[p]) >= 0]
            edges = []
            for k in range(r):
                a, b = poly[k], poly[(k + 1) % r]
                if any(orientation(pts[a], pts[b], pts[q]) < 0 for q in range(n)):
                    edges.append((a, b))
            for extra in _subsets(inside):
                out.append(Candidate(frozenset(vs + extra), poly, tuple(edges)))
    out.sort(key=lambda c: (sorted(c.cell), len(c.cell)))
    return tuple(out)


def iter_subdivisions(config: PointConfiguration, limit: int = DEFAULT_LIMIT):
    """Yield every polyhedral subdivision of ``config`` (regular or not)."""
    n = config.n
    if n > limit:
        raise SizeLimit(f"{n} points exceeds the enumeration limit of {limit}")
    pts = config.points
    cands = candidate_cells(config)
    by_edge: dict[tuple[int, int], list[Candidate]] = {}
    for c in cands:
        for e in c.edges:
            by_edge.setdefault(e, []).append(c)
        m = len(c.polygon)
        for k in range(m):
            e = (c.polygon[k], c.polygon[(k + 1) % m])
            if e not in c.edges:
                by_edge.setdefault(("hull",) + e, []).append(c)

    hull = convex_hull(config)
    u0, u1 = hull[0], hull[1]
    first = []
    for w in range(n):
        if w != u0 and orientation(pts[u0], pts[u1], pts[w]) == 0:
            first.extend(by_edge.get(("hull", u0, w), ()))

    chosen: list[Candidate] = []
    needed: set[tuple[int, int]] = set()

    def compatible(c: Candidate) -> bool:
        return all(_proper_pair(config, c.cell, d.cell) is None for d in chosen)

    def place(c: Candidate):
        added, removed = [], []
        for a, b in c.edges:
            if (a, b) in needed:
                needed.discard((a, b))
                removed.append((a, b))
            else:
                needed.add((b, a))
                added.append((b, a))
        chosen.append(c)
        return added, removed

    def unplace(added, removed):
        chosen.pop()
        for e in added:
            needed.discard(e)
        needed.update(removed)

    def search():
        if not needed:
            yield Subdivision.from_cells((c.cell for c in chosen), n)
            return
        e = min(needed)
        for c in by_edge.get(e, ()):
            if compatible(c):
                undo = place(c)
                yield from search()
                unplace(*undo)

    for c in first:
        undo = place(c)
        yield from search()
        unplace(*undo)


def all_subdivisions(config: PointConfiguration, limit: int = DEFAULT_LIMIT) -> list[Subdivision]:
    subs = set(iter_subdivisions(config, limit))
    return sorted(subs, key=lambda s: (s.sorted_cells(), sorted(s.unused)))
