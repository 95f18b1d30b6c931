"""Crossings and chambers of the two-circle vector drawings against Z(n).

Usage: python3 scripts/two_circle_table.py [--max-n 12]
"""
import argparse

from regsub.gale import arc_crossings, chamber_count, hill_number, two_circle_vectors


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()
    print(f"{'n':>3} {'Z(n)':>6} {'crossings':>10} {'chambers':>9}")
    for n in range(5, args.max_n + 1):
        vs = two_circle_vectors(n)
        rep = arc_crossings(vs)
        chambers = chamber_count(vs) if rep.generic else "-"
        print(f"{n:>3} {hill_number(n):>6} {rep.c:>10} {chambers:>9}")


if __name__ == "__main__":
    main()
