"""Measure pruned-solver work growth on the hard instance family.

Prints a table of counters for doubling sizes plus the per-doubling
growth ratios.  The family keeps every weight inside the open window
(W/4, 3W/7), so neither pruning rule can fire and the solver must
examine a quartic number of (state, cut) pairs.
"""

from __future__ import annotations

import argparse
import time

from twocst import hard_instance, solve_pruned


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--sizes",
        default="28,56,112",
        help="comma-separated key counts, multiples of 7 (default 28,56,112)",
    )
    parser.add_argument("--gamma", default=None, help="weight decay ratio P/Q (default 3/4)")
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    rows = []
    for n in sizes:
        if args.gamma:
            from fractions import Fraction

            inst = hard_instance(n, Fraction(args.gamma))
        else:
            inst = hard_instance(n)
        start = time.perf_counter()
        cost, _tree, stats = solve_pruned(inst)
        wall = time.perf_counter() - start
        wmax = max(inst.weights)
        total = sum(inst.weights)
        rows.append((n, stats, wall, wmax / total))

    header = f"{'n':>5} {'subproblems':>12} {'cutpoints':>12} {'eq_prunes':>10} {'lt_prunes':>10} {'wmax/W':>8} {'sec':>8}"
    print(header)
    print("-" * len(header))
    for n, stats, wall, frac in rows:
        print(
            f"{n:>5} {stats.subproblems_evaluated:>12} {stats.cutpoints_scanned:>12} "
            f"{stats.eq_prunes:>10} {stats.lt_prunes:>10} {frac:>8.4f} {wall:>8.2f}"
        )
    print()
    for prev, cur in zip(rows, rows[1:]):
        if cur[0] == 2 * prev[0]:
            r_sub = cur[1].subproblems_evaluated / prev[1].subproblems_evaluated
            r_cut = cur[1].cutpoints_scanned / prev[1].cutpoints_scanned
            print(
                f"n {prev[0]} -> {cur[0]}: subproblems x{r_sub:.2f}, cutpoints x{r_cut:.2f}"
            )


if __name__ == "__main__":
    main()
