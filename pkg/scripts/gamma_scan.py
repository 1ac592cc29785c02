"""Scan truncated geometric instances for the root-type transition.

For weights proportional to gamma^i the optimal root flips from an
equal-to test on the heaviest key to a less-than cut somewhere
between gamma = 0.55 and gamma = 0.70; the scan prints the exact
equal-to and cut-rooted costs side by side so the crossover is
visible.  Ratios are parsed exactly (11/20 or 0.55), never floats.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from twocst import geometric_scan


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=25, help="number of keys")
    parser.add_argument(
        "--gammas",
        default="1/3,1/2,11/20,4/7,3/5,0.61,5/8,2/3,7/10",
        help="comma-separated ratios to scan",
    )
    args = parser.parse_args()

    gammas = [Fraction(g) for g in args.gammas.split(",")]
    records = geometric_scan(args.n, gammas)
    header = f"{'gamma':>8} {'root':>6} {'eq_cost':>28} {'lt_cost':>28} {'chain==closed_form':>20}"
    print(header)
    print("-" * len(header))
    for rec in records:
        print(
            f"{str(rec['gamma']):>8} {rec['root']:>6} {rec['eq_cost']:>28} "
            f"{rec['lt_cost']:>28} {str(rec['chain_matches_closed_form']):>20}"
        )


if __name__ == "__main__":
    main()
