"""Shared generators and independent oracles for the test suite."""
from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from regsub.geometry import PointConfiguration, in_general_position


def random_config(n: int, rng: random.Random, box: int = 20) -> PointConfiguration:
    """Random integer points in general position."""
    while True:
        pts = {(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(n)}
        if len(pts) < n:
            continue
        cfg = PointConfiguration.from_coords(sorted(pts))
        if in_general_position(cfg):
            return cfg


def catalan_dp(n: int) -> int:
    c = [1] + [0] * n
    for m in range(1, n + 1):
        c[m] = sum(c[i] * c[m - 1 - i] for i in range(m))
    return c[n]


def brute_hull_vertices(cfg: PointConfiguration) -> set[int]:
    """Labels that are not in the convex hull of the others (checked by triangles and segments)."""
    pts = cfg.points
    out = set()
    for p in range(cfg.n):
        others = [q for q in range(cfg.n) if q != p]
        covered = False
        for a, b, c in combinations(others, 3):
            d = [(pts[b].x - pts[a].x) * (pts[c].y - pts[a].y) - (pts[b].y - pts[a].y) * (pts[c].x - pts[a].x)]
            if d[0] == 0:
                continue
            s = []
            for u, v in ((a, b), (b, c), (c, a)):
                s.append((pts[v].x - pts[u].x) * (pts[p].y - pts[u].y) - (pts[v].y - pts[u].y) * (pts[p].x - pts[u].x))
            if all(x >= 0 for x in s) or all(x <= 0 for x in s):
                covered = True
                break
        if not covered:
            for a, b in combinations(others, 2):
                u, v, w = pts[a], pts[b], pts[p]
                if (v.x - u.x) * (w.y - u.y) == (v.y - u.y) * (w.x - u.x) and \
                        min(u.x, v.x) <= w.x <= max(u.x, v.x) and min(u.y, v.y) <= w.y <= max(u.y, v.y):
                    covered = True
                    break
        if not covered:
            out.add(p)
    return out


def in_circle(a, b, c, d) -> int:
    """Sign of the in-circle determinant; positive when ``d`` is inside the circle of ccw ``abc``."""
    rows = [(p.x - d.x, p.y - d.y, (p.x - d.x) ** 2 + (p.y - d.y) ** 2) for p in (a, b, c)]
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = rows
    det = a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1)
    return (det > 0) - (det < 0)


def float_arcs_cross(a, b, c, d) -> bool:
    """Numeric oracle: do the short great-circle arcs ab and cd cross?"""
    def unit(v):
        v = [float(x) for x in v]
        r = math.sqrt(sum(x * x for x in v))
        return [x / r for x in v]

    def cross(u, v):
        return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    a, b, c, d = map(unit, (a, b, c, d))
    line = cross(cross(a, b), cross(c, d))
    r = math.sqrt(dot(line, line))
    if r < 1e-12:
        return False
    x = [t / r for t in line]
    for cand in (x, [-t for t in x]):
        def on_arc(p, q):
            ang = math.acos(max(-1.0, min(1.0, dot(p, q))))
            return abs(math.acos(max(-1.0, min(1.0, dot(p, cand)))) +
                       math.acos(max(-1.0, min(1.0, dot(cand, q)))) - ang) < 1e-9
        if on_arc(a, b) and on_arc(c, d):
            return True
    return False


def rational_rotation(p: int, q: int):
    """Exact rotation about the z-axis by the angle with tangent half-angle p/q."""
    t = Fraction(p, q)
    c, s = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
    return ((c, -s, Fraction(0)), (s, c, Fraction(0)), (Fraction(0), Fraction(0), Fraction(1)))
