"""Minimal enumerator of triangulations of small 3-dimensional point sets.

Private: only the duality cross-check uses it.  Points must be in general
position (no four coplanar) and all must be vertices of their convex hull, so
every triangulation uses every point.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .linalg import nullspace
from .lp import strictly_feasible


def _orient(a, b, c, d) -> int:
    u = [b[k] - a[k] for k in range(3)]
    v = [c[k] - a[k] for k in range(3)]
    w = [d[k] - a[k] for k in range(3)]
    det = (u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
           + u[2] * (v[0] * w[1] - v[1] * w[0]))
    return (det > 0) - (det < 0)


def _circuit(pts, five):
    rows = [[Fraction(1)] * 5] + [[pts[i][k] for i in five] for k in range(3)]
    (lam,) = nullspace(rows, 5)
    return {i: l for i, l in zip(five, lam)}


class _Setup:
    def __init__(self, pts):
        self.pts = pts
        n = len(pts)
        for q in combinations(range(n), 4):
            if _orient(*(pts[i] for i in q)) == 0:
                raise ValueError("four coplanar points")
        self.circuits = {five: _circuit(pts, five) for five in combinations(range(n), 5)}
        self.hull = set()
        for t in combinations(range(n), 3):
            sides = {_orient(*(pts[i] for i in t), pts[q]) for q in range(n) if q not in t}
            if len(sides) == 1:
                self.hull.add(t)
        if {i for t in self.hull for i in t} != set(range(n)):
            raise ValueError("every point must be a hull vertex")

    def side(self, tri, q) -> int:
        return _orient(*(self.pts[i] for i in tri), self.pts[q])

    def proper(self, s: frozenset, t: frozenset) -> bool:
        union = sorted(s | t)
        for five in combinations(union, 5):
            lam = self.circuits[five]
            pos = {i for i, l in lam.items() if l > 0}
            neg = {i for i, l in lam.items() if l < 0}
            if (pos <= s and neg <= t) or (pos <= t and neg <= s):
                return False
        return True


def triangulations(pts) -> list[frozenset]:
    """All triangulations, each a frozenset of tetrahedra (frozensets of labels)."""
    st = _Setup(pts)
    n = len(pts)
    tets = [frozenset(q) for q in combinations(range(n), 4)]
    by_tri: dict[tuple, list[frozenset]] = {}
    for t in tets:
        for tri in combinations(sorted(t), 3):
            (apex,) = t - set(tri)
            by_tri.setdefault((tri, st.side(tri, apex)), []).append(t)

    chosen: list[frozenset] = []
    needed: set[tuple] = set()
    found: set[frozenset] = set()

    def place(t):
        added, removed = [], []
        for tri in combinations(sorted(t), 3):
            if tri in st.hull:
                continue
            (apex,) = t - set(tri)
            want = (tri, -st.side(tri, apex))
            mine = (tri, st.side(tri, apex))
            if mine in needed:
                needed.discard(mine)
                removed.append(mine)
            else:
                needed.add(want)
                added.append(want)
        chosen.append(t)
        return added, removed

    def unplace(added, removed):
        chosen.pop()
        needed.difference_update(added)
        needed.update(removed)

    def search():
        if not needed:
            found.add(frozenset(chosen))
            return
        key = min(needed)
        for t in by_tri.get(key, ()):
            if t not in chosen and all(st.proper(t, c) for c in chosen):
                undo = place(t)
                search()
                unplace(*undo)

    f0 = min(st.hull)
    (q,) = [q for q in range(n) if q not in f0][:1]
    inner = st.side(f0, q)
    for t in by_tri.get((f0, inner), ()):
        undo = place(t)
        search()
        unplace(*undo)
    return sorted(found, key=lambda T: sorted(sorted(x) for x in T))


def is_regular(pts, triangulation) -> bool:
    """Local convexity across every interior triangle, decided by the exact LP."""
    st = _Setup(pts)
    forms = []
    tets = list(triangulation)
    for s, t in combinations(tets, 2):
        if len(s & t) != 3:
            continue
        five = tuple(sorted(s | t))
        lam = st.circuits[five]
        (d,) = s - t
        sign = 1 if lam[d] > 0 else -1
        forms.append(tuple(sign * lam.get(i, 0) for i in range(len(pts))))
    return strictly_feasible(forms, len(pts)) is not None


def regular_triangulation_count(pts) -> int:
    return sum(1 for T in triangulations(pts) if is_regular(pts, T))
