"""How often the explicit extended-star lifting works before the LP fallback is needed.

Usage: python3 scripts/completion_routes.py [--configs 20] [--seed 0]
"""
import argparse
import random
from collections import Counter
from dataclasses import dataclass
from itertools import product

from regsub.errors import GeneralPositionRequired, InvariantError
from regsub.geometry import PointConfiguration, convex_hull, in_general_position
from regsub.signatures import complete_extended_star


@dataclass
class Config:
    configs: int = 20
    seed: int = 0
    box: int = 20


def random_points(n, rng, box):
    while True:
        pts = sorted({(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(n)})
        if len(pts) == n:
            cfg = PointConfiguration.from_coords(pts)
            if in_general_position(cfg):
                return cfg


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally = Counter()
    for k in range(cfg.configs):
        pts = random_points(6 + k % 2, rng, cfg.box)
        for apex in convex_hull(pts):
            for sig in product((-1, 0, 1), repeat=pts.n - 3):
                try:
                    complete_extended_star(pts, apex, sig, method="constructive")
                    tally[pts.n, "explicit"] += 1
                except InvariantError:
                    tally[pts.n, "lp"] += 1
                except GeneralPositionRequired:
                    tally[pts.n, "skipped"] += 1
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--configs", type=int, default=Config.configs)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    tally = run(Config(args.configs, args.seed))
    for n in sorted({k[0] for k in tally}):
        e, l = tally[n, "explicit"], tally[n, "lp"]
        print(f"n={n}: explicit {e}, lp fallback {l} ({100 * l / max(1, e + l):.1f}%)")


if __name__ == "__main__":
    main()
