"""Exact rational simplex, used to decide strict feasibility of homogeneous systems.

All regularity questions in this package reduce to: given linear forms
``f_1..f_m`` and ``e_1..e_r`` on ``R^d``, is there ``y`` with every ``f_i(y) > 0``
and every ``e_j(y) = 0``?  Equalities are eliminated by parametrizing their
kernel, and the open cone becomes the bounded LP

    maximize s  subject to  f_i(y) >= s,  s <= 1,

which is feasible at the origin.  The cone is nonempty iff the optimum is
positive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import nullspace

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class LPResult:
    status: str  # "optimal" or "unbounded"
    value: Fraction | None
    x: list[Fraction] | None


def maximize(c: Sequence, a: Sequence[Sequence], b: Sequence) -> LPResult:
    """Maximize ``c.x`` subject to ``a x <= b`` and ``x >= 0``, requiring ``b >= 0``.

    Dense tableau with Bland's rule, so degenerate pivots cannot cycle.
    """
    m = len(a)
    nv = len(c)
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("origin must be feasible (b >= 0)")
    width = nv + m
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in a[i]] + [ZERO] * m + [Fraction(b[i])]
        row[nv + i] = ONE
        rows.append(row)
    # reduced profits, objective value in the last slot (negated)
    obj = [Fraction(v) for v in c] + [ZERO] * m + [ZERO]
    basis = [nv + i for i in range(m)]

    while True:
        enter = next((j for j in range(width) if obj[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = rows[i][enter]
            if coef > 0:
                ratio = rows[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return LPResult("unbounded", None, None)
        prow = rows[leave]
        pv = prow[enter]
        if pv != 1:
            prow = [v / pv for v in prow]
            rows[leave] = prow
        nz = [j for j, v in enumerate(prow) if v != 0]
        for i in range(m):
            if i == leave:
                continue
            f = rows[i][enter]
            if f != 0:
                r = rows[i]
                for j in nz:
                    r[j] -= f * prow[j]
        f = obj[enter]
        for j in nz:
            obj[j] -= f * prow[j]
        basis[leave] = enter

    x = [ZERO] * nv
    for i, bv in enumerate(basis):
        if bv < nv:
            x[bv] = rows[i][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), ZERO)
    return LPResult("optimal", value, x)


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a), ZERO)


def strictly_feasible(forms: Sequence[Sequence], dim: int,
                      equalities: Sequence[Sequence] = ()) -> list[Fraction] | None:
    """A point with all ``forms`` positive and all ``equalities`` zero, or None."""
    basis = nullspace([list(e) for e in equalities], dim) if equalities else \
        [[Fraction(int(i == j)) for i in range(dim)] for j in range(dim)]
    if not forms:
        return [ZERO] * dim
    if not basis:
        return None
    g = [[_dot(f, v) for v in basis] for f in forms]
    if any(all(x == 0 for x in row) for row in g):
        return None
    k = len(basis)

    def lift(z):
        return [sum((z[t] * basis[t][i] for t in range(k) if z[t]), ZERO) for i in range(dim)]

    # cheap exact guess before the LP: the sum of normalized constraint normals
    guess = [ZERO] * k
    for row in g:
        norm = sum(x * x for x in row)
        for t in range(k):
            guess[t] += row[t] / norm
    if all(_dot(row, guess) > 0 for row in g):
        return lift(guess)

    c = [ZERO] * (2 * k) + [ONE]
    a = [[-x for x in row] + list(row) + [ONE] for row in g]
    a.append([ZERO] * (2 * k) + [ONE])
    b = [ZERO] * len(g) + [ONE]
    res = maximize(c, a, b)
    if res.status != "optimal" or res.value <= 0:
        return None
    z = [res.x[t] - res.x[k + t] for t in range(k)]
    return lift(z)
