"""Pruned and bounded-weight exact solvers with work instrumentation.

Three solvers, all returning the same optimal cost as the full level DP
on their admissible inputs:

* ``solve_pruned``: the threshold-pruned recurrence.  A state whose
  heaviest member holds at least 3/7 of the member weight resolves by
  equality alone; below a strict quarter it resolves by cuts alone; in
  between both branches are explored.  Cut scans are restricted to the
  quarter-refined interval, which any optimal cut must lie in.
* ``solve_bounded_log``: states are (interval, hole count); equality
  removals are only explored while the removed key keeps a quarter of
  the remaining weight, capping hole depth logarithmically.  Needs
  strictly positive weights.
* ``solve_bounded_const``: for weights in [1, R]; intervals longer than
  4R are forced cut-rooted, shorter windows delegate to the full DP
  with window-pattern caching.

Work counters deliberately count each (state, cut position) evaluation
once, with no deduplication of states that share a member set at
different positions: the counters are the evidence for how much work
the pruned recurrence really does, so the recursion shape must not be
collapsed behind their back.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from math import ceil, log
from typing import ClassVar

from .dp_core import solve_full
from .errors import PreconditionError, TwocstError
from .instance import WeightedInstance
from .tree import EqNode, Leaf, LtNode, Node


@dataclass
class SolveStats:
    """Exact work counters for one solve.

    ``subproblems_evaluated`` counts memo misses; ``cutpoints_scanned``
    counts (state, cut position) pairs examined; ``eq_prunes`` counts
    states resolved by equality alone (cut branch skipped);
    ``lt_prunes`` counts states resolved by cuts alone (equality branch
    skipped).  ``max_hole_depth`` is the largest number of removed keys
    seen in any state.  Memo hits touch no counter.
    """

    subproblems_evaluated: int = 0
    cutpoints_scanned: int = 0
    eq_prunes: int = 0
    lt_prunes: int = 0
    max_hole_depth: int = 0
    branches: dict[tuple[int, int, int], str] | None = None

    CSV_HEADER: ClassVar[tuple[str, ...]] = (
        "instance",
        "n",
        "subproblems",
        "cutpoints",
        "eq_prunes",
        "lt_prunes",
        "max_hole_depth",
        "wall_ms",
    )

    def to_csv_row(self, instance_id: str, n: int, wall_ms: float) -> list[str]:
        return [
            instance_id,
            str(n),
            str(self.subproblems_evaluated),
            str(self.cutpoints_scanned),
            str(self.eq_prunes),
            str(self.lt_prunes),
            str(self.max_hole_depth),
            f"{wall_ms:.3f}",
        ]


@dataclass(frozen=True)
class RefinedInterval:
    """Contiguous run of cut positions whose lighter side weighs at
    least a quarter of the member weight; may be empty."""

    lo: int
    hi: int
    empty: bool

    def __contains__(self, cut: int) -> bool:
        return not self.empty and self.lo <= cut <= self.hi

    def positions(self) -> range:
        return range(0) if self.empty else range(self.lo, self.hi + 1)

    def width(self) -> int:
        return 0 if self.empty else self.hi - self.lo + 1


@dataclass(frozen=True)
class HoleState:
    """A bounded-log state: interval [i, j] minus its s heaviest keys,
    which together weigh ``removed`` leaving member weight v."""

    i: int
    j: int
    s: int
    v: int


_EMPTY_INTERVAL = RefinedInterval(0, -1, True)


def refined_interval(inst: WeightedInstance, sid: tuple[int, int, int], weight_fn=None) -> RefinedInterval:
    """Quarter-balanced cut positions for a subproblem, via three binary
    searches over the monotone prefix weight (find one balanced cut by
    walking toward the heavier side, then locate both endpoints).

    ``weight_fn(i, l, h)`` may be injected to count weight probes; it
    must agree with ``inst.sub_weight``.
    """
    i, j, h = sid
    if inst.sub_count(i, j, h) < 2:
        raise PreconditionError(f"refined interval needs at least two keys in {sid}")
    if weight_fn is None:
        weight_fn = inst.sub_weight
    w = weight_fn(i, j, h)
    mn = inst.first_member(i, j, h)
    mx = inst.last_member(i, j, h)
    lo, hi = mn, mx - 1
    found = None
    while lo <= hi:
        mid = (lo + hi) // 2
        left = weight_fn(i, mid, h)
        if 4 * left < w:
            lo = mid + 1
        elif 4 * (w - left) < w:
            hi = mid - 1
        else:
            found = mid
            break
    if found is None:
        return _EMPTY_INTERVAL
    lo, hi = mn, found
    while lo < hi:
        mid = (lo + hi) // 2
        if 4 * weight_fn(i, mid, h) >= w:
            hi = mid
        else:
            lo = mid + 1
    left_end = lo
    lo, hi = found, mx - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if 4 * (w - weight_fn(i, mid, h)) >= w:
            lo = mid
        else:
            hi = mid - 1
    return RefinedInterval(left_end, lo, False)


def solve_pruned(
    inst: WeightedInstance, record_branches: bool = False
) -> tuple[int, Node, SolveStats]:
    """Threshold-pruned exact solve.

    States are positional (i, j, h) with h the rank of the heaviest
    member; cut scans cover only the quarter-refined positions.  When
    neither threshold fires and the refined interval is empty, no cut
    can head an optimal tree, so the state resolves by equality.
    """
    n = inst.n
    rank = inst._rank
    w_arr = inst._w
    asc = (0,) + inst.asc_perm
    stats = SolveStats(branches={} if record_branches else None)
    memo: dict[int, int] = {}
    choices: dict[int, tuple] = {}
    base = n + 2
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 8 * n + 1000))

    def solve(i: int, j: int, h: int) -> int:
        key = (i * base + j) * base + h
        got = memo.get(key)
        if got is not None:
            return got
        stats.subproblems_evaluated += 1
        mpos = [k for k in range(i, j + 1) if rank[k] <= h]
        m = len(mpos)
        holes = (j - i + 1) - m
        if holes > stats.max_hole_depth:
            stats.max_hole_depth = holes
        if m <= 1:
            memo[key] = 0
            choices[key] = ("leaf", mpos[0] if m else None)
            return 0
        prefw = [0] * (m + 1)
        prefmax = [0] * (m + 1)
        sufmax = [0] * (m + 2)
        tmax = 0
        for t in range(1, m + 1):
            k = mpos[t - 1]
            r = rank[k]
            prefw[t] = prefw[t - 1] + w_arr[k]
            prefmax[t] = prefmax[t - 1] if prefmax[t - 1] > r else r
            if r == h:
                tmax = t
        for t in range(m, 0, -1):
            r = rank[mpos[t - 1]]
            sufmax[t] = sufmax[t + 1] if sufmax[t + 1] > r else r
        w = prefw[m]
        pmax = asc[h]
        wmax = w_arr[pmax]
        h2 = max(prefmax[tmax - 1], sufmax[tmax + 1])

        def solve_eq() -> int:
            c = w + solve(i, j, h2)
            choices[key] = ("eq", pmax, h2)
            return c

        if 7 * wmax >= 3 * w:
            stats.eq_prunes += 1
            c = solve_eq()
            branch = "eq-only"
        else:
            t_lo = 0
            t_hi = -1
            for t in range(1, m):
                left = prefw[t]
                if 4 * left >= w and 4 * (w - left) >= w:
                    if t_lo == 0:
                        t_lo = t
                    t_hi = t
            lt_only = 4 * wmax < w
            if t_hi < t_lo:
                if lt_only:
                    raise TwocstError(f"empty refined interval below the quarter threshold at {(i, j, h)}")
                stats.eq_prunes += 1
                c = solve_eq()
                branch = "eq-only"
            else:
                split = None
                best = None
                for t in range(t_lo, t_hi + 1):
                    hl = prefmax[t]
                    hr = sufmax[t + 1]
                    for l in range(mpos[t - 1], mpos[t]):
                        v = solve(i, l, hl) + solve(l + 1, j, hr)
                        if split is None or v < split:
                            split = v
                            best = (l, hl, hr)
                    stats.cutpoints_scanned += mpos[t] - mpos[t - 1]
                if lt_only:
                    stats.lt_prunes += 1
                    c = w + split
                    choices[key] = ("split",) + best
                    branch = "lt-only"
                else:
                    eq_rest = solve(i, j, h2)
                    if eq_rest <= split:
                        c = w + eq_rest
                        choices[key] = ("eq", pmax, h2)
                    else:
                        c = w + split
                        choices[key] = ("split",) + best
                    branch = "both"
        if stats.branches is not None:
            stats.branches[(i, j, h)] = branch
        memo[key] = c
        return c

    total = solve(1, n, n)
    tree = _build_from_choices(choices, base, 1, n, n)
    return total, tree, stats


def _build_from_choices(choices: dict[int, tuple], base: int, i0: int, j0: int, h0: int) -> Node:
    out: list[Node] = []
    stack: list[tuple] = [("go", i0, j0, h0)]
    while stack:
        entry = stack.pop()
        tag = entry[0]
        if tag == "make_eq":
            no = out.pop()
            out.append(EqNode(entry[1], Leaf(entry[1]), no))
            continue
        if tag == "make_lt":
            no = out.pop()
            yes = out.pop()
            out.append(LtNode(entry[1], yes, no))
            continue
        _, i, j, h = entry
        ch = choices[(i * base + j) * base + h]
        if ch[0] == "leaf":
            if ch[1] is None:
                raise TwocstError("cannot build a tree for an empty subproblem")
            out.append(Leaf(ch[1]))
        elif ch[0] == "eq":
            stack.append(("make_eq", ch[1]))
            stack.append(("go", i, j, ch[2]))
        else:
            _, l, hl, hr = ch
            stack.append(("make_lt", l + 1))
            stack.append(("go", l + 1, j, hr))
            stack.append(("go", i, l, hl))
    return out[0]


def solve_bounded_log(inst: WeightedInstance) -> tuple[int, Node, SolveStats]:
    """Exact solve over (interval, hole count) states.

    Holes are always the s heaviest keys of the interval, so a state is
    fully described by (i, j, s); less-than splits distribute the holes
    positionally.  Equality removal is explored exactly when the
    heaviest member still holds a quarter of the member weight
    (non-strict, the safe side of the quarter threshold), which bounds
    hole depth by log_{4/3}(nR); the bound is asserted after solving.
    """
    n = inst.n
    if 0 in inst.weights:
        raise PreconditionError("zero weights present; rescale or use another solver")
    rank = inst._rank
    w_arr = inst._w
    stats = SolveStats()
    memo: dict[tuple[int, int, int], int] = {}
    choices: dict[tuple[int, int, int], tuple] = {}
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 8 * n + 1000))

    def solve(i: int, j: int, s: int) -> int:
        key = (i, j, s)
        got = memo.get(key)
        if got is not None:
            return got
        stats.subproblems_evaluated += 1
        if s > stats.max_hole_depth:
            stats.max_hole_depth = s
        by_rank = sorted(range(i, j + 1), key=lambda k: rank[k], reverse=True)
        hole_pos = sorted(by_rank[:s])
        members = sorted(by_rank[s:])
        m = len(members)
        if m <= 1:
            memo[key] = 0
            choices[key] = ("leaf", members[0] if m else None)
            return 0
        v = sum(w_arr[k] for k in members)
        state = HoleState(i, j, s, v)
        if m == 2:
            a, b = members
            heavy, light = (a, b) if rank[a] > rank[b] else (b, a)
            memo[key] = v
            choices[key] = ("pair", state, heavy, light)
            return v
        heaviest = max(members, key=lambda k: rank[k])
        wmax = w_arr[heaviest]
        mn = members[0]
        mx = members[-1]
        split = None
        best_cut = None
        hptr = 0
        nholes = len(hole_pos)
        s_left = 0
        for l in range(mn, mx):
            while hptr < nholes and hole_pos[hptr] <= l:
                hptr += 1
                s_left += 1
            c = solve(i, l, s_left) + solve(l + 1, j, s - s_left)
            if split is None or c < split:
                split = c
                best_cut = (l, s_left)
        stats.cutpoints_scanned += mx - mn
        if 4 * wmax >= v:
            eq_rest = solve(i, j, s + 1)
            if eq_rest <= split:
                memo[key] = v + eq_rest
                choices[key] = ("eq", state, heaviest)
                return v + eq_rest
        else:
            stats.lt_prunes += 1
        memo[key] = v + split
        choices[key] = ("split", state) + best_cut
        return v + split

    total = solve(1, n, 0)
    big_r = max(inst.weights)
    cap = ceil(log(n * big_r) / log(4 / 3)) + 1 if n * big_r > 1 else 1
    if stats.max_hole_depth > cap:
        raise TwocstError(
            f"hole depth {stats.max_hole_depth} exceeded the log bound {cap}"
        )
    tree = _build_log_tree(choices, 1, n)
    return total, tree, stats


def _build_log_tree(choices: dict[tuple[int, int, int], tuple], n_i: int, n_j: int) -> Node:
    out: list[Node] = []
    stack: list[tuple] = [("go", n_i, n_j, 0)]
    while stack:
        entry = stack.pop()
        tag = entry[0]
        if tag == "make_eq":
            no = out.pop()
            out.append(EqNode(entry[1], Leaf(entry[1]), no))
            continue
        if tag == "make_lt":
            no = out.pop()
            yes = out.pop()
            out.append(LtNode(entry[1], yes, no))
            continue
        _, i, j, s = entry
        ch = choices[(i, j, s)]
        kind = ch[0]
        if kind == "leaf":
            if ch[1] is None:
                raise TwocstError("cannot build a tree for an empty subproblem")
            out.append(Leaf(ch[1]))
        elif kind == "pair":
            _, _, heavy, light = ch
            out.append(EqNode(heavy, Leaf(heavy), Leaf(light)))
        elif kind == "eq":
            stack.append(("make_eq", ch[2]))
            stack.append(("go", i, j, s + 1))
        else:
            _, _, l, s_left = ch
            stack.append(("make_lt", l + 1))
            stack.append(("go", l + 1, j, s - s_left))
            stack.append(("go", i, l, s_left))
    return out[0]


def _interval_costs_bounded(
    inst: WeightedInstance, limit: int
) -> tuple[list[list[int]], SolveStats, dict]:
    """Hole-free interval costs for weights in [1, limit].

    Windows of at most 4·limit keys go through the full DP (cached by
    weight pattern); anything longer has its heaviest key strictly
    below a quarter of the interval weight, so only cuts can be
    optimal there and a plain interval recurrence applies.
    """
    n = inst.n
    window = 4 * limit
    weights = inst.weights
    stats = SolveStats()
    cache: dict[tuple[int, ...], tuple] = {}
    pre = [0] * (n + 1)
    for k in range(1, n + 1):
        pre[k] = pre[k - 1] + weights[k - 1]
    costs = [[0] * (n + 1) for _ in range(n + 2)]
    for length in range(2, n + 1):
        short = length <= window
        for i in range(1, n - length + 2):
            j = i + length - 1
            if short:
                pattern = weights[i - 1 : j]
                got = cache.get(pattern)
                if got is None:
                    table, best, _ = solve_full(inst.restrict(i, j))
                    stats.subproblems_evaluated += table.cells_computed
                    stats.cutpoints_scanned += table.cuts_scanned
                    got = (table, best)
                    cache[pattern] = got
                costs[i][j] = got[1]
            else:
                row = costs[i]
                col = [costs[l + 1][j] for l in range(i, j)]
                best = min(map(lambda a, b: a + b, row[i:j], col))
                costs[i][j] = pre[j] - pre[i - 1] + best
                stats.subproblems_evaluated += 1
                stats.cutpoints_scanned += j - i
    return costs, stats, cache


def _shift_tree(tree: Node, delta: int) -> Node:
    if delta == 0:
        return tree
    out: list[Node] = []
    stack: list[tuple[Node, bool]] = [(tree, False)]
    while stack:
        node, seen = stack.pop()
        if isinstance(node, Leaf):
            out.append(Leaf(node.key + delta))
        elif not seen:
            stack.append((node, True))
            stack.append((node.yes, False))
            stack.append((node.no, False))
        else:
            yes = out.pop()
            no = out.pop()
            out.append(type(node)(node.key + delta, yes, no))
    return out[0]


def solve_bounded_const(
    inst: WeightedInstance, limit: int | None = None
) -> tuple[int, Node, SolveStats]:
    """Exact solve for integer weights in [1, limit].

    Intended for small weight bounds: the interval table costs O(n²)
    states, with full-DP work confined to windows of at most 4·limit
    keys.  Hole depth is not tracked here (windows hide it), so
    ``max_hole_depth`` stays 0.
    """
    n = inst.n
    if limit is None:
        limit = max(inst.weights)
    if not isinstance(limit, int) or limit < 1:
        raise PreconditionError(f"weight bound must be a positive int, got {limit!r}")
    for k, w in enumerate(inst.weights, start=1):
        if not 1 <= w <= limit:
            raise PreconditionError(f"weight {w} of key {k} outside [1, {limit}]")
    costs, stats, cache = _interval_costs_bounded(inst, limit)
    window = 4 * limit
    weights = inst.weights

    out: list[Node] = []
    stack: list[tuple] = [("go", 1, n)]
    while stack:
        entry = stack.pop()
        if entry[0] == "make_lt":
            no = out.pop()
            yes = out.pop()
            out.append(LtNode(entry[1], yes, no))
            continue
        _, i, j = entry
        if i == j:
            out.append(Leaf(i))
            continue
        if j - i + 1 <= window:
            table, _ = cache[weights[i - 1 : j]]
            width = j - i + 1
            out.append(_shift_tree(table.reconstruct((1, width, width)), i - 1))
            continue
        row = costs[i]
        best = None
        best_l = None
        for l in range(i, j):
            v = row[l] + costs[l + 1][j]
            if best is None or v < best:
                best = v
                best_l = l
        stack.append(("make_lt", best_l + 1))
        stack.append(("go", best_l + 1, j))
        stack.append(("go", i, best_l))
    return costs[1][n], out[0], stats
