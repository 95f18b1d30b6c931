"""Command-line interface.

Exit codes: 0 success or PASS, 1 FAIL, 2 usage or input error, 3 size limit.
Set ``REGSUB_WORKERS`` to check regularity in several processes.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Callable

from . import census as C
from . import gale as G
from . import signatures as S
from .enumeration import DEFAULT_LIMIT
from .errors import RegsubError, SizeLimit
from .geometry import PointConfiguration
from .io import dumps, format_rational, load_subdivision, parse_delta, parse_heights, parse_points
from .subdivision import face_dimension, is_regular, lift_subdivision, validate_subdivision

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _planar(path: str) -> PointConfiguration:
    cfg = parse_points(path)
    if not isinstance(cfg, PointConfiguration):
        raise UsageError("this command needs a planar point file")
    return cfg


def _high(path: str) -> G.HighDimConfiguration:
    cfg = parse_points(path)
    if isinstance(cfg, PointConfiguration):
        return G.planar_as_high_dim(cfg)
    return cfg


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for {args.command}")
    return value


def _check_limit(cfg, args):
    if cfg.n > args.limit:
        raise SizeLimit(f"{cfg.n} points exceeds the limit of {args.limit}")


def cmd_census(args) -> dict:
    cfg = _planar(args.points)
    _check_limit(cfg, args)
    report = C.census_report(cfg, apex=args.apex, limit=args.limit)
    if args.dim is not None or args.regular_only:
        subs = C.enumerate_subdivisions(cfg, regular_only=True, dimension=args.dim, limit=args.limit)
        report["subdivisions"] = [s.to_json() for s in subs]
    return report


def cmd_lift(args) -> dict:
    cfg = _planar(args.points)
    sub = lift_subdivision(cfg, parse_heights(args.heights))
    return {"subdivision": sub.to_json(), "dimension": face_dimension(cfg, sub, check=False)}


def cmd_signature(args) -> dict:
    cfg = _planar(args.points)
    apex = _need(args, "apex")
    sub = load_subdivision(args.subdivision, cfg.n)
    bad = validate_subdivision(cfg, sub)
    if bad:
        raise UsageError("invalid subdivision: " + "; ".join(v.detail for v in bad))
    out = {"sigma": str(S.link_signature(cfg, apex, sub)), "well_formed": False}
    if is_regular(cfg, sub).regular:
        es = S.extended_signature(cfg, apex, sub)
        if es is not None:
            out.update(well_formed=True, delta=list(es[1]))
    return out


def cmd_star(args) -> dict:
    cfg = _planar(args.points)
    star = S.extended_star(cfg, _need(args, "apex"), _need(args, "sigma"))
    return {
        "polyline": list(star.polyline),
        "cells_above": [sorted(c) for c in star.cells_above],
        "cells_below": [sorted(c) for c in star.cells_below],
        "interval_lengths": [iv.length for iv in star.intervals],
        "shelling_order": [list(t) for t in star.shelling_order],
    }


def cmd_complete_star(args) -> dict:
    cfg = _planar(args.points)
    apex, sigma = _need(args, "apex"), _need(args, "sigma")
    heights, sub = S.complete_extended_star(cfg, apex, sigma)
    star = S.extended_star(cfg, apex, sigma)
    ok = all(c in sub.cells for c in star.cells)
    return {"heights": heights, "subdivision": sub.to_json(), "verdict": "PASS" if ok else "FAIL"}


def _local_choices(cfg: PointConfiguration, cell, dim: int):
    sub_cfg, labels = cfg.subconfiguration(cell)
    subs = C.enumerate_subdivisions(sub_cfg, regular_only=True, dimension=dim)
    if not subs:
        raise UsageError(f"cell {sorted(cell)} has no regular subdivision of dimension {dim}")
    from .subdivision import Subdivision

    return Subdivision.from_cells([[labels[v] for v in c] for c in subs[0].cells], cfg.n)


def cmd_well_formed(args) -> dict:
    cfg = _planar(args.points)
    apex, sigma = _need(args, "apex"), _need(args, "sigma")
    star = S.extended_star(cfg, apex, sigma)
    delta = parse_delta(args.delta or "")
    S._check_delta([iv.length for iv in star.intervals], delta)
    pieces = [_local_choices(cfg, c, d) for c, d in zip(star.cells_below, delta)]
    sub = S.build_well_formed(cfg, apex, sigma, delta, pieces)
    dim = face_dimension(cfg, sub)
    expected = sum(1 for ch in sigma if ch == "0") + sum(delta)
    return {"subdivision": sub.to_json(), "dimension": dim, "expected_dimension": expected,
            "verdict": "PASS" if dim == expected else "FAIL"}


def cmd_verify_main(args) -> dict:
    cfg = _planar(args.points)
    rep = C.verify_main_theorem(cfg, limit=args.limit)
    return {"n": rep.n, "f_vector": list(rep.f_vector), "assoc_f_vector": list(rep.assoc_f_vector),
            "margins": list(rep.margins), "verdict": rep.verdict}


def cmd_stratify(args) -> dict:
    cfg = _planar(args.points)
    rep = C.stratified_comparison(cfg, _need(args, "apex"), limit=min(args.limit, C.STRATIFY_LIMIT))
    rows = [{"sigma": r.sigma, "delta": list(r.delta), "count": r.count,
             "lower_bound": r.lower_bound, "convex_count": r.convex_count} for r in rep.rows]
    per = {s: {"count": a, "convex_count": b} for s, (a, b) in rep.per_signature.items()}
    return {"n": rep.n, "apex": rep.apex, "strata": rows, "per_signature": per,
            "convex_census_matches": rep.convex_census_matches, "verdict": rep.verdict}


def cmd_assoc(args) -> dict:
    return {"n": args.n, "faces": [C.assoc_faces(args.n, k) for k in range(args.n)]}


def cmd_catalan(args) -> dict:
    return {"n": args.n, "catalan": C.catalan(args.n)}


def _crossing_payload(vs: G.SphericalVectors) -> dict:
    rep = G.arc_crossings(vs)
    out = {"n": vs.n, "crossings": rep.c, "generic": rep.generic, "violations": rep.violations}
    if rep.generic:
        out["chambers"] = G.chamber_count(vs)
    else:
        out["regions"] = G.euler_face_count(vs, rep)[2]
    return out


def cmd_gale(args) -> dict:
    cfg = _high(args.points)
    if args.perturb:
        cfg = G.perturb_points(cfg)
    vs = G.gale_dual(cfg)
    out = _crossing_payload(vs)
    out["vectors"] = [[format_rational(c) for c in v] for v in vs.vectors]
    return out


def cmd_two_circle(args) -> dict:
    out = _crossing_payload(G.two_circle_vectors(args.n))
    out["hill"] = G.hill_number(args.n)
    out["verdict"] = "PASS" if out["crossings"] == out["hill"] else "FAIL"
    return out


def cmd_hill(args) -> dict:
    return {"n": args.n, "hill": G.hill_number(args.n)}


def cmd_duality(args) -> dict:
    rep = G.duality_check(_high(args.points), perturb=args.perturb)
    return {"n": rep.n, "d": rep.d, "chambers": rep.chambers, "regular_triangulations": rep.triangulations,
            "generic": rep.generic, "violations": rep.violations, "verdict": rep.verdict}


COMMANDS: dict[str, tuple[Callable, str]] = {
    "census": (cmd_census, "face numbers of the secondary polytope by enumeration"),
    "lift": (cmd_lift, "regular subdivision induced by a heights file"),
    "signature": (cmd_signature, "link signature of a subdivision (JSON file)"),
    "star": (cmd_star, "extended star of a signature"),
    "complete-star": (cmd_complete_star, "heights completing an extended star"),
    "well-formed": (cmd_well_formed, "a well-formed subdivision with signature (sigma, delta)"),
    "verify-main": (cmd_verify_main, "compare face numbers with the convex polygon"),
    "stratify": (cmd_stratify, "per-signature comparison with the radial convexification"),
    "assoc": (cmd_assoc, "face numbers of an associahedron"),
    "catalan": (cmd_catalan, "a Catalan number"),
    "gale": (cmd_gale, "Gale dual, arc crossings and chambers"),
    "two-circle": (cmd_two_circle, "crossings of the two-circle drawing"),
    "hill": (cmd_hill, "the Hill number Z(n)"),
    "duality": (cmd_duality, "chambers of the Gale dual versus regular triangulations"),
}

_POINTS = {"census", "lift", "signature", "star", "complete-star", "well-formed",
           "verify-main", "stratify", "gale", "duality"}
_INT = {"assoc", "catalan", "two-circle", "hill"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regsub", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name in _POINTS:
            p.add_argument("points", help="point file")
        if name in _INT:
            p.add_argument("n", type=int)
        if name == "lift":
            p.add_argument("heights", help="heights file")
        if name == "signature":
            p.add_argument("subdivision", help="subdivision JSON file")
        p.add_argument("--apex", type=int)
        p.add_argument("--sigma")
        p.add_argument("--delta")
        p.add_argument("--regular-only", action="store_true")
        p.add_argument("--dim", type=int)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
        p.add_argument("--perturb", action="store_true")
    return parser


def _render(payload: dict) -> str:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (list, dict)) and len(str(value)) > 100:
            lines.append(f"{key}:")
            items = value.items() if isinstance(value, dict) else enumerate(value)
            for k, v in items:
                lines.append(f"  {k}: {v}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    start = time.perf_counter()
    try:
        payload = handler(args)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, RegsubError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - start
    if args.json:
        print(dumps(payload))
    else:
        import json

        print(_render(json.loads(dumps(payload))))
        print(f"time: {elapsed:.2f}s")
    return EXIT_FAIL if payload.get("verdict") == "FAIL" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
