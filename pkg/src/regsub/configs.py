"""Named point configurations used throughout the tests, scripts and CLI."""
from __future__ import annotations

from .geometry import PointConfiguration

HEX6 = PointConfiguration.from_coords([(4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)])

# "mother of all examples": two concentric parallel triangles
MOAE6 = PointConfiguration.from_coords([(0, 0), (6, 0), (0, 6), (1, 1), (4, 1), (1, 4)])

# five collinear points plus an apex off the line
FAN6 = PointConfiguration.from_coords([(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (2, 3)])

NAMED = {"hex6": HEX6, "moae6": MOAE6, "fan6": FAN6}


def convex_polygon(n: int) -> PointConfiguration:
    """``n`` integer points in strictly convex position, on the parabola ``y = x^2``.

    The x-coordinates are centred so the polygon is not too lopsided; the
    upper hull is the single edge between the extremes.
    """
    return PointConfiguration.from_coords([(i - n // 2, (i - n // 2) ** 2) for i in range(n)])

