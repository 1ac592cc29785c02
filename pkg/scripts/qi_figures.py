"""Render quadrangle-inequality maps for a few instructive instances.

Writes CSV plus PGM pairs into an output directory: the three-key
heavy-middle example, a repeating 1,3 pattern, and a seeded random
instance.  Red pixels are interval pairs where the quadrangle
inequality fails, which is exactly why Knuth-Yao style speedups do
not transfer to the two-way-test model.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from twocst import new_instance, pattern_instance, qi_table, random_instance


def emit(name: str, inst, outdir: Path) -> None:
    table = qi_table(inst)
    (outdir / f"{name}.csv").write_text(table.to_csv())
    (outdir / f"{name}.pgm").write_text(table.to_pgm())
    print(f"{name}: n={table.n} red_cells={table.red_count}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="qi_maps")
    parser.add_argument("--n", type=int, default=96, help="size for pattern and random maps")
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    emit("heavy_mid_3", new_instance([1, 10, 1]), outdir)
    emit(f"pattern_1_3_n{args.n}", pattern_instance((1, 3), args.n), outdir)
    emit(
        f"random_seed{args.seed}_n{args.n}",
        random_instance(args.seed, 1, 3, args.n),
        outdir,
    )
    print(f"wrote maps to {outdir}/")


if __name__ == "__main__":
    main()
