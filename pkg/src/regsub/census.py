"""Desk-scale census of regular subdivisions and the inequalities checked against it."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .associahedron import AssocTable, assoc_f_vector, assoc_faces, catalan, catalan_inequalities
from .enumeration import DEFAULT_LIMIT, all_subdivisions
from .errors import GeneralPositionRequired, SizeLimit
from .geometry import PointConfiguration, convex_hull, in_general_position
from .signatures import (convex_count_mapped, extended_signature, format_signature,
                         link_signature, negative_intervals, radial_convexification,
                         run_lengths, signature_lower_bound, valid_deltas, convex_exact_count)
from .subdivision import Subdivision, face_dimension, is_regular

__all__ = [
    "AssocTable", "FaceCensus", "MainTheoremReport", "StratifiedReport", "StratumRow",
    "assoc_faces", "catalan", "catalan_inequalities", "enumerate_subdivisions",
    "face_census", "verify_main_theorem", "stratified_comparison", "census_report",
]

STRATIFY_LIMIT = 7
WORKERS_ENV = "REGSUB_WORKERS"


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _classify(args):
    config, sub = args
    if not is_regular(config, sub).regular:
        return None
    return face_dimension(config, sub, check=False)


def _dimensions(config: PointConfiguration, subs: Sequence[Subdivision]) -> list[int | None]:
    """Face dimension of each subdivision, or None for non-regular ones (order preserved)."""
    jobs = [(config, s) for s in subs]
    w = _workers()
    if w == 1 or len(jobs) < 64:
        return [_classify(j) for j in jobs]
    with ProcessPoolExecutor(w) as pool:
        return list(pool.map(_classify, jobs, chunksize=32))


def enumerate_subdivisions(config: PointConfiguration, *, regular_only: bool = False,
                           dimension: int | None = None,
                           limit: int = DEFAULT_LIMIT) -> list[Subdivision]:
    """All subdivisions in canonical order, optionally only regular ones of one dimension."""
    subs = all_subdivisions(config, limit)
    if not regular_only and dimension is None:
        return subs
    dims = _dimensions(config, subs)
    return [s for s, d in zip(subs, dims)
            if d is not None and (dimension is None or d == dimension)]


@dataclass
class FaceCensus:
    n: int
    f_vector: tuple[int, ...]
    total: int  # all subdivisions, regular or not
    regular: list[tuple[Subdivision, int]] = field(repr=False, default_factory=list)
    per_signature: dict[str, int] = field(default_factory=dict)
    apex: int | None = None

    @property
    def regular_count(self) -> int:
        return sum(self.f_vector)


def face_census(config: PointConfiguration, *, apex: int | None = None,
                limit: int = DEFAULT_LIMIT) -> FaceCensus:
    subs = all_subdivisions(config, limit)
    dims = _dimensions(config, subs)
    f = [0] * (config.n - 2)
    regular = []
    for s, d in zip(subs, dims):
        if d is not None:
            f[d] += 1
            regular.append((s, d))
    per_sig: dict[str, int] = {}
    if apex is not None:
        for s, _ in regular:
            key = format_signature(link_signature(config, apex, s))
            per_sig[key] = per_sig.get(key, 0) + 1
    return FaceCensus(config.n, tuple(f), len(subs), regular, dict(sorted(per_sig.items())), apex)


@dataclass
class MainTheoremReport:
    n: int
    f_vector: tuple[int, ...]
    assoc_f_vector: tuple[int, ...]

    @property
    def margins(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.f_vector, self.assoc_f_vector))

    @property
    def passed(self) -> bool:
        return all(m >= 0 for m in self.margins)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def verify_main_theorem(config: PointConfiguration, *, limit: int = DEFAULT_LIMIT,
                        census: FaceCensus | None = None) -> MainTheoremReport:
    if config.n > limit:
        raise SizeLimit(f"{config.n} points exceeds the limit of {limit}")
    if not in_general_position(config):
        raise GeneralPositionRequired("the lower bound is stated for points in general position")
    census = census or face_census(config, limit=limit)
    return MainTheoremReport(config.n, census.f_vector, assoc_f_vector(config.n))


@dataclass(frozen=True)
class StratumRow:
    sigma: str
    delta: tuple[int, ...]
    count: int          # well-formed regular subdivisions of the input
    lower_bound: int    # product of associahedron numbers over its negative intervals
    convex_count: int   # subdivisions of the convexified input mapping to (sigma, delta)

    @property
    def ok(self) -> bool:
        return self.count >= self.lower_bound >= self.convex_count


@dataclass
class StratifiedReport:
    n: int
    apex: int
    rows: list[StratumRow]
    per_signature: dict[str, tuple[int, int]]  # sigma -> (count, convex count)
    convex_census_matches: bool | None = None

    @property
    def passed(self) -> bool:
        return (all(r.ok for r in self.rows)
                and all(a >= b for a, b in self.per_signature.values())
                and self.convex_census_matches is not False)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def _convex_strata(config: PointConfiguration, apex: int, limit: int) -> dict[tuple[str, tuple[int, ...]], int]:
    """Census of a convex configuration by extended signature."""
    out: dict[tuple[str, tuple[int, ...]], int] = {}
    for sub, _ in face_census(config, limit=limit).regular:
        key = extended_signature(config, apex, sub)
        if key is None:
            raise AssertionError("every subdivision in convex position is well-formed")
        k = (format_signature(key[0]), key[1])
        out[k] = out.get(k, 0) + 1
    return out


def stratified_comparison(config: PointConfiguration, apex: int, *, limit: int = STRATIFY_LIMIT,
                          census: FaceCensus | None = None,
                          check_convex: bool = True) -> StratifiedReport:
    """Compare per-signature counts against the radially convexified configuration."""
    if config.n > limit:
        raise SizeLimit(f"{config.n} points exceeds the stratification limit of {limit}")
    if not in_general_position(config):
        raise GeneralPositionRequired("signatures need points in general position")
    if apex not in convex_hull(config):
        from .errors import NotHullVertex
        raise NotHullVertex(f"label {apex} is not a vertex of the convex hull")
    census = census or face_census(config, limit=limit)
    strata: dict[tuple[str, tuple[int, ...]], int] = {}
    per_sig_count: dict[str, int] = {}
    for sub, _ in census.regular:
        sig = format_signature(link_signature(config, apex, sub))
        per_sig_count[sig] = per_sig_count.get(sig, 0) + 1
        key = extended_signature(config, apex, sub)
        if key is not None:
            k = (format_signature(key[0]), key[1])
            strata[k] = strata.get(k, 0) + 1

    rows = []
    per_sig: dict[str, tuple[int, int]] = {}
    for sig in product((-1, 0, 1), repeat=config.n - 3):
        s = format_signature(sig)
        lengths = [iv.length for iv in negative_intervals(config, apex, sig)]
        for delta in valid_deltas(lengths):
            rows.append(StratumRow(s, tuple(delta), strata.get((s, tuple(delta)), 0),
                                   signature_lower_bound(config, apex, sig, delta),
                                   convex_count_mapped(config, apex, sig, delta)))
        convex_total = sum(convex_exact_count(sig, d) for d in valid_deltas(run_lengths(sig)))
        per_sig[s] = (per_sig_count.get(s, 0), convex_total)

    matches = None
    if check_convex:
        convex = radial_convexification(config, apex)
        observed = _convex_strata(convex, apex, limit)
        expected = {}
        for sig in product((-1, 0, 1), repeat=config.n - 3):
            for d in valid_deltas(run_lengths(sig)):
                expected[(format_signature(sig), tuple(d))] = convex_exact_count(sig, d)
        matches = observed == expected
    return StratifiedReport(config.n, apex, rows, per_sig, matches)


def census_report(config: PointConfiguration, *, apex: int | None = None,
                  limit: int = DEFAULT_LIMIT) -> dict:
    """The machine-readable census report."""
    census = face_census(config, apex=apex, limit=limit)
    assoc = assoc_f_vector(config.n)
    verdict = "N/A"
    if in_general_position(config):
        verdict = verify_main_theorem(config, limit=limit, census=census).verdict
    report = {
        "n": config.n,
        "f_vector": list(census.f_vector),
        "assoc_f_vector": list(assoc),
        "total_subdivisions": census.total,
        "verdict": verdict,
    }
    if apex is not None:
        per = {}
        for sig, count in census.per_signature.items():
            convex_total = sum(convex_exact_count(sig, d) for d in valid_deltas(run_lengths(sig)))
            per[sig] = {"count": count, "convex_count": convex_total}
        report["per_signature"] = per
    return report
