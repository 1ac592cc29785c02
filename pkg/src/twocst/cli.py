"""Command line for solving, verifying, and benchmarking.

Subcommands: ``solve`` (one instance, one algorithm), ``verify`` (a
named check suite, JSON report), ``qi`` (quadrangle-inequality map as
CSV and PGM), ``bench`` (CSV timing/counter rows over a grid of
instances), and ``generate`` (write a generated instance file).

All numeric output is exact: integer costs of the scaled instance
plus the scale factor, never floats (wall times excepted).

Exit codes: 0 success, 1 verification failures, 2 malformed input or
usage, 3 violated precondition (including the memory budget).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path

from .dp_core import solve_full
from .errors import ParseError, PreconditionError
from .instance import WeightedInstance, load_instance, new_instance
from .oracle import brute_force_optimal
from .pruned import SolveStats, solve_bounded_const, solve_bounded_log, solve_pruned
from .structure import (
    GeneratorSpec,
    geometric_instance,
    hard_instance,
    pattern_instance,
    qi_table,
    random_instance,
    suite_counterexamples,
    suite_geometric,
    suite_oracle,
    suite_pattern_claims,
    suite_thresholds,
)
from .threeway import solve_3wcst_cubic, solve_3wcst_knuth_yao
from .tree import EqNode, Leaf, Node, to_dot, to_json

ALGORITHMS = ("full", "pruned", "bounded-const", "bounded-log", "oracle", "3wcst", "3wcst-ky")


def _root_type(tree: Node | None) -> str:
    if tree is None:
        return "none"
    if isinstance(tree, Leaf):
        return "leaf"
    return "equal-to" if isinstance(tree, EqNode) else "less-than"


def _run_algorithm(
    inst: WeightedInstance, algorithm: str, limit: int | None
) -> tuple[int, Node | None, SolveStats, float]:
    start = time.perf_counter()
    tree: Node | None
    if algorithm == "full":
        table, best, tree = solve_full(inst)
        stats = SolveStats(
            subproblems_evaluated=table.cells_computed,
            cutpoints_scanned=table.cuts_scanned,
        )
    elif algorithm == "pruned":
        best, tree, stats = solve_pruned(inst)
    elif algorithm == "bounded-log":
        best, tree, stats = solve_bounded_log(inst)
    elif algorithm == "bounded-const":
        best, tree, stats = solve_bounded_const(inst, limit)
    elif algorithm == "oracle":
        best, tree = brute_force_optimal(inst)
        stats = SolveStats()
    elif algorithm == "3wcst":
        best = solve_3wcst_cubic(inst)
        tree = None
        stats = SolveStats()
    elif algorithm == "3wcst-ky":
        best, scans = solve_3wcst_knuth_yao(inst)
        tree = None
        stats = SolveStats(cutpoints_scanned=scans)
    else:
        raise PreconditionError(f"unknown algorithm {algorithm!r}")
    wall_ms = (time.perf_counter() - start) * 1000.0
    return best, tree, stats, wall_ms


def cmd_solve(args: argparse.Namespace) -> int:
    inst = load_instance(args.file)
    best, tree, stats, wall_ms = _run_algorithm(inst, args.algorithm, args.limit)
    if (args.tree or args.dot) and tree is None:
        raise PreconditionError(f"algorithm {args.algorithm} does not produce a test tree")
    if args.tree:
        Path(args.tree).write_text(json.dumps(to_json(tree), indent=2) + "\n")
    if args.dot:
        Path(args.dot).write_text(to_dot(tree) + "\n")
    print(f"n={inst.n}")
    print(f"scale={inst.scale}")
    print(f"cost={best}")
    if inst.scale > 1:
        print(f"cost_exact={Fraction(best, inst.scale)}")
    print(f"root={_root_type(tree)}")
    print(f"subproblems={stats.subproblems_evaluated}")
    print(f"cutpoints={stats.cutpoints_scanned}")
    print(f"eq_prunes={stats.eq_prunes}")
    print(f"lt_prunes={stats.lt_prunes}")
    print(f"max_hole_depth={stats.max_hole_depth}")
    print(f"wall_ms={wall_ms:.3f}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suite = args.suite
    if suite == "counterexamples":
        results = suite_counterexamples()
    elif suite == "thresholds":
        results = suite_thresholds(args.cases or 500, args.n or 12, args.seed or 0)
    elif suite == "oracle":
        results = suite_oracle(args.cases or 200, args.n or 8, args.seed or 7)
    elif suite == "pattern-claims":
        results = suite_pattern_claims(args.p)
    else:
        results = suite_geometric(args.n or 25)
    ok = all(r.ok for r in results)
    print(
        json.dumps(
            {"suite": suite, "results": [asdict(r) for r in results], "ok": ok},
            indent=2,
            sort_keys=True,
        )
    )
    return 0 if ok else 1


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_fractions(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"expected comma-separated ratios, got {text!r}") from exc


def _instance_grid(args: argparse.Namespace) -> list[tuple[str, WeightedInstance]]:
    """Expand bench/qi generator flags into labeled instances."""
    out: list[tuple[str, WeightedInstance]] = []
    for path in getattr(args, "files", None) or ():
        out.append((path, load_instance(path)))
    if getattr(args, "weights", None):
        label = "weights-" + args.weights.replace(",", "_")
        out.append((label, new_instance(list(_parse_ints(args.weights)))))
    sizes = _parse_ints(args.n) if isinstance(getattr(args, "n", None), str) else None
    if getattr(args, "hard", None):
        for n in _parse_ints(args.hard):
            out.append((f"hard-n{n}", hard_instance(n)))
    if getattr(args, "pattern", None):
        cycle = _parse_ints(args.pattern)
        if not sizes:
            raise ParseError("--pattern needs --n")
        for n in sizes:
            label = "pattern-" + "_".join(map(str, cycle)) + f"-n{n}"
            out.append((label, pattern_instance(cycle, n)))
    if getattr(args, "geometric", None):
        if not sizes:
            raise ParseError("--geometric needs --n")
        for g in _parse_fractions(args.geometric):
            for n in sizes:
                out.append((f"geometric-{g.numerator}_{g.denominator}-n{n}", geometric_instance(g, n)))
    if getattr(args, "random", False):
        if args.seed is None:
            raise ParseError("--random requires --seed")
        if not sizes:
            raise ParseError("--random needs --n")
        lo, hi = _parse_ints(args.range)
        for n in sizes:
            out.append((f"random-seed{args.seed}-{lo}to{hi}-n{n}", random_instance(args.seed, lo, hi, n)))
    if not out:
        raise ParseError("no instances given; pass files or generator flags")
    return out


def cmd_qi(args: argparse.Namespace) -> int:
    grid = _instance_grid(args)
    if len(grid) != 1:
        raise ParseError("qi takes exactly one instance")
    label, inst = grid[0]
    table = qi_table(inst)
    prefix = Path(args.out)
    csv_path = prefix.with_suffix(".csv")
    pgm_path = prefix.with_suffix(".pgm")
    csv_path.write_text(table.to_csv())
    pgm_path.write_text(table.to_pgm())
    print(f"instance={label}")
    print(f"n={table.n}")
    print(f"red_cells={table.red_count}")
    print(f"csv={csv_path}")
    print(f"pgm={pgm_path}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    algorithms = args.alg.split(",")
    for algorithm in algorithms:
        if algorithm not in ALGORITHMS:
            raise ParseError(f"unknown algorithm {algorithm!r}; pick from {ALGORITHMS}")
    grid = _instance_grid(args)
    sink = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(sink)
        writer.writerow(
            (
                "instance",
                "algorithm",
                "n",
                "scale",
                "cost",
                "root_type",
                "subproblems",
                "cutpoints",
                "eq_prunes",
                "lt_prunes",
                "max_hole_depth",
                "wall_ms",
                "error",
            )
        )
        for label, inst in grid:
            for algorithm in algorithms:
                try:
                    best, tree, stats, wall_ms = _run_algorithm(inst, algorithm, args.limit)
                    writer.writerow(
                        (
                            label,
                            algorithm,
                            inst.n,
                            inst.scale,
                            best,
                            _root_type(tree),
                            stats.subproblems_evaluated,
                            stats.cutpoints_scanned,
                            stats.eq_prunes,
                            stats.lt_prunes,
                            stats.max_hole_depth,
                            f"{wall_ms:.3f}",
                            "",
                        )
                    )
                except PreconditionError as exc:
                    writer.writerow(
                        (label, algorithm, inst.n, inst.scale, "", "", "", "", "", "", "", "", str(exc))
                    )
    finally:
        if args.out:
            sink.close()
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    spec = GeneratorSpec(
        kind=args.kind,
        n=args.size,
        seed=args.seed,
        lo=args.lo,
        hi=args.hi,
        gamma=Fraction(args.gamma) if args.gamma else None,
        cycle=_parse_ints(args.cycle) if args.cycle else (1, 3),
        heavy=args.heavy,
        halves=args.halves,
        alpha=Fraction(args.alpha) if args.alpha else None,
        beta=Fraction(args.beta) if args.beta else None,
        eps=Fraction(args.eps) if args.eps else None,
    )
    inst = spec.generate()
    lines = [f"# {spec.label()}"]
    if inst.scale > 1:
        lines.append(f"# integer weights at scale {inst.scale}")
    lines.append(" ".join(str(w) for w in inst.weights))
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out} (n={inst.n}, scale={inst.scale})")
    else:
        sys.stdout.write(text)
    return 0


def _add_grid_flags(parser: argparse.ArgumentParser, files: bool) -> None:
    if files:
        parser.add_argument("files", nargs="*", default=[], help="instance files")
    parser.add_argument("--weights", default=None, help="inline weights W1,W2,...")
    parser.add_argument("--hard", default=None, help="hard-family sizes N1,N2,... (multiples of 7)")
    parser.add_argument("--pattern", default=None, help="repeating weight cycle C1,C2,...")
    parser.add_argument("--geometric", default=None, help="ratio list, e.g. 0.55 or 4/7,7/10")
    parser.add_argument("--random", action="store_true", help="seeded random weights")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--range", default="1,3", help="weight range LO,HI for --random")
    parser.add_argument("--n", default=None, help="key counts N1,N2,... for generators")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twocst",
        description="Exact solvers and a verification lab for optimal "
        "two-way comparison search trees.",
        epilog="Exit codes: 0 ok, 1 verification failures, 2 bad input, "
        "3 violated precondition. Set TWOCST_MEM_LIMIT_MB to cap the "
        "full table's memory estimate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance file")
    p_solve.add_argument("file")
    p_solve.add_argument("algorithm", choices=ALGORITHMS)
    p_solve.add_argument("--limit", type=int, default=None, help="weight bound for bounded-const")
    p_solve.add_argument("--tree", default=None, help="write the optimal tree as JSON")
    p_solve.add_argument("--dot", default=None, help="write the optimal tree as Graphviz dot")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="run a named check suite")
    p_verify.add_argument(
        "suite",
        choices=("counterexamples", "thresholds", "oracle", "pattern-claims", "geometric"),
    )
    p_verify.add_argument("--cases", type=int, default=None)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--p", type=int, default=3, help="pattern size exponent")
    p_verify.set_defaults(func=cmd_verify)

    p_qi = sub.add_parser("qi", help="write quadrangle-inequality maps (.csv and .pgm)")
    _add_grid_flags(p_qi, files=True)
    p_qi.add_argument("--out", required=True, help="output path prefix")
    p_qi.set_defaults(func=cmd_qi)

    p_bench = sub.add_parser("bench", help="CSV of costs, counters, wall times")
    _add_grid_flags(p_bench, files=True)
    p_bench.add_argument("--alg", "--algorithms", default="full,pruned", help="comma-separated algorithms")
    p_bench.add_argument("--limit", type=int, default=None)
    p_bench.add_argument("--out", default=None)
    p_bench.set_defaults(func=cmd_bench)

    p_gen = sub.add_parser("generate", help="write a generated instance file")
    p_gen.add_argument(
        "kind",
        choices=("pattern", "geometric", "random", "tight4", "tight8", "hard", "heavy-mid"),
    )
    p_gen.add_argument("--n", type=int, default=None, dest="size")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--lo", type=int, default=0)
    p_gen.add_argument("--hi", type=int, default=10)
    p_gen.add_argument("--gamma", default=None, help="ratio P/Q or decimal")
    p_gen.add_argument("--cycle", default=None, help="comma-separated weights")
    p_gen.add_argument("--heavy", type=int, default=None)
    p_gen.add_argument("--halves", type=int, default=None)
    p_gen.add_argument("--alpha", default=None)
    p_gen.add_argument("--beta", default=None)
    p_gen.add_argument("--eps", default=None)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
