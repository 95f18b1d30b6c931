"""Face numbers of random configurations next to the convex polygon's.

Usage: python3 scripts/census_sweep.py [--n 6] [--samples 10] [--seed 0]
"""
import argparse
import random
from dataclasses import dataclass

from regsub.census import verify_main_theorem
from regsub.geometry import PointConfiguration, in_general_position


@dataclass
class Config:
    n: int = 6
    samples: int = 10
    seed: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    done = 0
    while done < cfg.samples:
        pts = sorted({(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(cfg.n)})
        if len(pts) < cfg.n:
            continue
        pc = PointConfiguration.from_coords(pts)
        if not in_general_position(pc):
            continue
        rep = verify_main_theorem(pc)
        print(f"{rep.verdict}  f={rep.f_vector}  polygon={rep.assoc_f_vector}  margins={rep.margins}")
        done += 1


if __name__ == "__main__":
    main()
