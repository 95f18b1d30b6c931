"""Catalan numbers, associahedron face numbers and the Catalan inequalities."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb, prod
from typing import Sequence

from .errors import OutOfRange


def catalan(n: int) -> int:
    if n < 0:
        raise OutOfRange(f"catalan({n}) is undefined")
    return comb(2 * n, n) // (n + 1)


def assoc_faces(n: int, k: int) -> int:
    """Number of ``k``-faces of the ``(n-1)``-dimensional associahedron."""
    if n < 1 or not 0 <= k <= n - 1:
        raise OutOfRange(f"need 0 <= k <= n-1, got n={n}, k={k}")
    num = comb(n - 1, k) * comb(2 * n - k, n)
    q, r = divmod(num, n + 1)
    assert r == 0
    return q


def assoc_f_vector(n: int) -> tuple[int, ...]:
    """Face numbers of the secondary polytope of a convex ``n``-gon, dimensions ``0..n-3``."""
    return tuple(assoc_faces(n - 2, k) for k in range(n - 2))


@dataclass
class AssocTable:
    n: int
    row: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.row = {k: assoc_faces(self.n, k) for k in range(self.n)}

    def __getitem__(self, k: int) -> int:
        return self.row[k]


def compositions(total: int, caps: Sequence[int]):
    """Tuples ``d`` with ``sum(d) == total`` and ``0 <= d_i < caps_i``."""
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0] - 1) + 1):
        for rest in compositions(total - first, caps[1:]):
            yield (first,) + rest


def convolution(ms: Sequence[int], d: int) -> int:
    """``sum over d_1+..+d_l = d`` of ``prod C_{m_i}^{d_i}``."""
    return sum(prod(assoc_faces(m, di) for m, di in zip(ms, ds))
               for ds in compositions(d, list(ms)))


@dataclass(frozen=True)
class CatalanVerdict:
    ms: tuple[int, ...]
    d: int
    product_lhs: int
    product_rhs: int
    convolution_lhs: int
    convolution_rhs: int

    @property
    def ok(self) -> bool:
        return self.product_lhs <= self.product_rhs and self.convolution_lhs <= self.convolution_rhs


def catalan_inequalities(ms: Sequence[int], d: int) -> CatalanVerdict:
    """Evaluate the product inequality and, for positive parts, the convolution inequality."""
    ms = tuple(int(m) for m in ms)
    if any(m < 0 for m in ms):
        raise OutOfRange("parts must be non-negative")
    total = sum(ms)
    plhs, prhs = prod(catalan(m) for m in ms), catalan(total)
    parts = [m for m in ms if m > 0]
    if parts and 0 <= d <= total - 1:
        clhs, crhs = convolution(parts, d), assoc_faces(total, d)
    else:
        clhs = crhs = 0
    return CatalanVerdict(ms, d, plhs, prhs, clhs, crhs)


def all_part_tuples(max_total: int):
    """Every tuple of positive integers with sum at most ``max_total``."""
    def rec(left):
        yield ()
        for m in range(1, left + 1):
            for rest in rec(left - m):
                yield (m,) + rest
    yield from (t for t in rec(max_total) if t)
