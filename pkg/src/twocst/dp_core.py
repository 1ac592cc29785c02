"""Exact level-indexed dynamic program over all comparison trees.

State C[h][i][j] is the optimal cost of a tree for the keys of [i, j]
that rank among the h lightest overall.  With p the key of rank h:

* p outside [i, j]: C[h][i][j] = C[h-1][i][j]
* fewer than two member keys: cost 0
* otherwise C = w + min(C[h-1][i][j], S) where w is the member weight,
  the first term tests equality on p (the heaviest member), and
  S = min over cuts l of C[h][i][l] + C[h][l+1][j] ranges over the cuts
  leaving member keys on both sides.

Levels share unchanged rows with their predecessor, so the table costs
one fresh row per (level, row-touched) pair instead of a full cube.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from operator import add

from .errors import MemoryBudgetError, PreconditionError
from .instance import SubproblemId, WeightedInstance
from .tree import EqNode, Leaf, LtNode, Node

MEM_LIMIT_ENV = "TWOCST_MEM_LIMIT_MB"


@dataclass
class MinimizerReport:
    """All optimal cut positions for one subproblem's split term."""

    id: SubproblemId
    minimizers: tuple[int, ...]
    canonical: int
    split_cost: int


class DpTable:
    """Dense per-level cost tables plus reconstruction helpers."""

    def __init__(self, inst: WeightedInstance):
        self.inst = inst
        self.levels: list[list[list[int]]] = []
        self.cells_computed = 0
        self.cuts_scanned = 0

    def cost_at(self, sid: tuple[int, int, int]) -> int:
        i, j, h = sid
        n = self.inst.n
        if not (1 <= i <= n and 1 <= j <= n and 0 <= h <= n):
            raise PreconditionError(f"subproblem {sid} out of range for n={n}")
        if i > j:
            return 0
        return self.levels[h][i][j]

    def _canonical_h(self, i: int, j: int, h: int) -> int:
        asc = self.inst.asc_perm
        while h > 0 and not (i <= asc[h - 1] <= j):
            h -= 1
        return h

    def _split_scan(self, i: int, j: int, h: int) -> tuple[int, list[int], int, int]:
        """(split_cost, all minimizers, mn, mx) over the standard range."""
        inst = self.inst
        mn = inst.first_member(i, j, h)
        mx = inst.last_member(i, j, h)
        if mn is None or mn == mx:
            raise PreconditionError(f"no valid cut: fewer than two keys in {(i, j, h)}")
        lvl = self.levels[h]
        row = lvl[i]
        best = None
        mins: list[int] = []
        for l in range(mn, mx):
            v = row[l] + lvl[l + 1][j]
            if best is None or v < best:
                best = v
                mins = [l]
            elif v == best:
                mins.append(l)
        return best, mins, mn, mx

    def minimizers_at(self, sid: tuple[int, int, int], inner: bool = False) -> MinimizerReport:
        """Optimal cuts for the split term of a subproblem.

        With ``inner=True`` the scan is restricted to cuts strictly
        inside the interval, l in [i+1, j-2]; cuts that slice off a
        single boundary position are excluded.
        """
        i, j, h = sid
        if not inner:
            best, mins, _, _ = self._split_scan(i, j, h)
            return MinimizerReport(SubproblemId(i, j, h), tuple(mins), mins[0], best)
        inst = self.inst
        mn = inst.first_member(i, j, h)
        mx = inst.last_member(i, j, h)
        if mn is None or mn == mx:
            raise PreconditionError(f"no valid cut: fewer than two keys in {(i, j, h)}")
        lo = max(mn, i + 1)
        hi = min(mx - 1, j - 2)
        if lo > hi:
            raise PreconditionError(f"no valid cut in inner range for {(i, j, h)}")
        lvl = self.levels[h]
        row = lvl[i]
        best = None
        mins = []
        for l in range(lo, hi + 1):
            v = row[l] + lvl[l + 1][j]
            if best is None or v < best:
                best = v
                mins = [l]
            elif v == best:
                mins.append(l)
        return MinimizerReport(SubproblemId(i, j, h), tuple(mins), mins[0], best)

    def choice_at(self, sid: tuple[int, int, int]) -> tuple[str, int | None]:
        """What an optimal tree does first here: ('leaf', key),
        ('eq', key) or ('split', cut)."""
        i, j, h = sid
        inst = self.inst
        h = self._canonical_h(i, j, h)
        m = inst.sub_count(i, j, h)
        if m == 0:
            return ("leaf", None)
        if m == 1:
            return ("leaf", inst.first_member(i, j, h))
        eq_rest = self.levels[h - 1][i][j]
        split, mins, _, _ = self._split_scan(i, j, h)
        if eq_rest <= split:
            return ("eq", inst.asc_perm[h - 1])
        return ("split", mins[0])

    def reconstruct(self, sid: tuple[int, int, int]) -> Node:
        """Optimal tree for a subproblem; equality wins ties and cut
        ties resolve leftmost, so reconstruction is deterministic."""
        vals: list[Node] = []
        stack: list[tuple] = [("go", sid[0], sid[1], sid[2])]
        inst = self.inst
        while stack:
            entry = stack.pop()
            if entry[0] == "make_eq":
                key = entry[1]
                no_child = vals.pop()
                vals.append(EqNode(key, Leaf(key), no_child))
                continue
            if entry[0] == "make_lt":
                key = entry[1]
                no_child = vals.pop()
                yes_child = vals.pop()
                vals.append(LtNode(key, yes_child, no_child))
                continue
            _, i, j, h = entry
            h = self._canonical_h(i, j, h)
            m = inst.sub_count(i, j, h)
            if m == 0:
                raise PreconditionError(f"empty subproblem {(i, j, h)} has no tree")
            if m == 1:
                vals.append(Leaf(inst.first_member(i, j, h)))
                continue
            eq_rest = self.levels[h - 1][i][j]
            split, mins, _, _ = self._split_scan(i, j, h)
            if eq_rest <= split:
                stack.append(("make_eq", inst.asc_perm[h - 1]))
                stack.append(("go", i, j, h - 1))
            else:
                l = mins[0]
                stack.append(("make_lt", l + 1))
                stack.append(("go", l + 1, j, h))
                stack.append(("go", i, l, h))
        return vals[0]


def _check_budget(n: int) -> None:
    raw = os.environ.get(MEM_LIMIT_ENV)
    if not raw:
        return
    try:
        limit_mb = int(raw)
    except ValueError:
        raise PreconditionError(f"{MEM_LIMIT_ENV} must be an integer, got {raw!r}")
    fresh_rows = n * (n + 1) // 2 + n + 1
    est = fresh_rows * ((n + 1) * 8 + 64)
    if est > limit_mb * (1 << 20):
        raise MemoryBudgetError(
            f"n={n} needs about {est // (1 << 20) + 1} MB of tables, over the "
            f"{limit_mb} MB budget ({MEM_LIMIT_ENV})"
        )


def solve_full(inst: WeightedInstance) -> tuple[DpTable, int, Node]:
    """All-levels exact solve: returns the table, the optimal cost and
    one optimal tree (deterministic tie-breaking)."""
    n = inst.n
    _check_budget(n)
    table = DpTable(inst)
    asc = inst.asc_perm
    rank = [inst.rank_of_key(k) for k in range(n + 1)]
    pw, pc = inst._prefix
    zrow = [0] * (n + 1)
    prev = [zrow] * (n + 1)
    table.levels.append(prev)
    cells = 0
    cuts = 0
    for h in range(1, n + 1):
        p = asc[h - 1]
        pw_h = pw[h]
        pc_h = pc[h]
        # nxt[k]: first member >= k at this level; prv[k]: last member <= k
        nxt = [0] * (n + 2)
        run = n + 1
        for k in range(n, 0, -1):
            if rank[k] <= h:
                run = k
            nxt[k] = run
        prv = [0] * (n + 1)
        run = 0
        for k in range(1, n + 1):
            if rank[k] <= h:
                run = k
            prv[k] = run
        cur = list(prev)
        for i in range(p, 0, -1):
            row = prev[i][:]
            cur[i] = row
            prev_row = prev[i]
            pw_i = pw_h[i - 1]
            pc_i = pc_h[i - 1]
            for j in range(max(p, i + 1), n + 1):
                if pc_h[j] - pc_i < 2:
                    continue
                mn = nxt[i]
                mx = prv[j]
                col = [r[j] for r in cur[mn + 1 : mx + 1]]
                split = min(map(add, row[mn:mx], col))
                cells += 1
                cuts += mx - mn
                eq_rest = prev_row[j]
                row[j] = pw_h[j] - pw_i + (eq_rest if eq_rest <= split else split)
        table.levels.append(cur)
        prev = cur
    table.cells_computed = cells
    table.cuts_scanned = cuts
    best = table.levels[n][1][n] if n >= 1 else 0
    tree = table.reconstruct((1, n, n))
    return table, best, tree


def root_split_costs(inst: WeightedInstance, table: DpTable | None = None) -> tuple[int, int]:
    """(best equality-rooted cost, best cut-rooted cost) for the whole
    instance; their minimum is the optimum."""
    if inst.n < 2:
        raise PreconditionError("root comparison needs at least two keys")
    if table is None:
        table, _, _ = solve_full(inst)
    n = inst.n
    eq_cost = inst.total + table.cost_at((1, n, n - 1))
    lt_cost = inst.total + table.minimizers_at((1, n, n)).split_cost
    return eq_cost, lt_cost
