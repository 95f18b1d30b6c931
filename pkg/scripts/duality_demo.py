"""Chambers of Gale duals next to regular triangulation counts.

Usage: python3 scripts/duality_demo.py
"""
from regsub.configs import HEX6, MOAE6
from regsub.gale import duality_check, moment_curve, planar_as_high_dim


def main():
    cases = [
        ("hexagon", planar_as_high_dim(HEX6), False),
        ("nested triangles", planar_as_high_dim(MOAE6), False),
        ("nested triangles, perturbed", planar_as_high_dim(MOAE6), True),
        ("cyclic polytope, 6 points", moment_curve(6, 2), False),
        ("cyclic 3-polytope, 7 points", moment_curve(7, 3), False),
    ]
    for name, cfg, perturb in cases:
        rep = duality_check(cfg, perturb=perturb)
        note = "" if rep.generic else "  (non-generic dual: regions counted directly)"
        print(f"{name:30s} chambers {rep.chambers:3d}  regular triangulations {rep.triangulations:3d}"
              f"  {rep.verdict}{note}")


if __name__ == "__main__":
    main()
