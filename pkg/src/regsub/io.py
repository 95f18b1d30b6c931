"""Text and JSON formats: point files, height files, subdivisions and reports."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import ParseError
from .gale import HighDimConfiguration
from .geometry import PointConfiguration, as_rational
from .subdivision import HeightVector, Subdivision


def _rational(token: str, line: int) -> Fraction:
    try:
        return as_rational(token)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ParseError(f"not a rational number: {token!r}", line) from None


def _data_lines(text: str):
    for k, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield k, s


def parse_points_text(text: str) -> PointConfiguration | HighDimConfiguration:
    rows = []
    width = None
    for k, s in _data_lines(text):
        toks = s.split()
        if width is None:
            width = len(toks)
        elif len(toks) != width:
            raise ParseError(f"expected {width} coordinates, got {len(toks)}", k)
        rows.append(tuple(_rational(t, k) for t in toks))
    if not rows:
        raise ParseError("no points in file")
    if width == 2:
        return PointConfiguration.from_coords(rows)
    if len(set(rows)) != len(rows):
        from .errors import DuplicatePoint
        raise DuplicatePoint("repeated point in file")
    return HighDimConfiguration(tuple(rows))


def parse_points(path: str | Path) -> PointConfiguration | HighDimConfiguration:
    return parse_points_text(Path(path).read_text(encoding="utf-8"))


def parse_heights_text(text: str) -> HeightVector:
    """One height per line; ``a;b;...`` gives infinitesimally smaller levels."""
    rows = []
    for k, s in _data_lines(text):
        rows.append([_rational(t.strip(), k) for t in s.split(";")])
    if not rows:
        raise ParseError("no heights in file")
    depth = max(len(r) for r in rows)
    levels = tuple(tuple(r[i] if i < len(r) else Fraction(0) for r in rows) for i in range(depth))
    return HeightVector(levels)


def parse_heights(path: str | Path) -> HeightVector:
    return parse_heights_text(Path(path).read_text(encoding="utf-8"))


def parse_delta(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"delta must be comma-separated integers, got {text!r}") from None


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def jsonable(obj: Any) -> Any:
    """Rationals become "p/q" strings, tuples become lists, subdivisions become dicts."""
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Subdivision):
        return obj.to_json()
    if isinstance(obj, HeightVector):
        return [[format_rational(v) for v in lv] for lv in obj.levels]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)


def load_subdivision(path: str | Path, n: int) -> Subdivision:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return Subdivision.from_json(data, n)
