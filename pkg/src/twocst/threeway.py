"""Three-way-comparison search tree baseline.

Every node of a three-way tree holds a key; a query compares against
the keys on its root path, one three-way comparison per node, and
stops at its own node.  The cost is therefore the weighted sum of
(depth + 1) over all keys.  These optima are the classic benchmark the
two-way solvers are measured against.

``solve_3wcst_cubic`` is the plain interval recurrence over all roots.
``solve_3wcst_knuth_yao`` restricts each interval's root scan to the
monotone window between the optimal roots of its two inner intervals,
which brings total scan work down to quadratic; both must agree.
"""

from __future__ import annotations

from typing import NamedTuple

from .instance import WeightedInstance


class KYResult(NamedTuple):
    cost: int
    root_scans: int


def solve_3wcst_cubic(inst: WeightedInstance) -> int:
    """Optimal three-way tree cost by scanning every root of every
    interval."""
    n = inst.n
    weights = inst.weights
    pre = [0] * (n + 1)
    for k in range(1, n + 1):
        pre[k] = pre[k - 1] + weights[k - 1]
    costs = [[0] * (n + 2) for _ in range(n + 2)]
    for length in range(1, n + 1):
        for i in range(1, n - length + 2):
            j = i + length - 1
            row = costs[i]
            best = min(costs[i][r - 1] + costs[r + 1][j] for r in range(i, j + 1))
            row[j] = pre[j] - pre[i - 1] + best
    return costs[1][n]


def solve_3wcst_knuth_yao(inst: WeightedInstance) -> KYResult:
    """Optimal three-way tree cost with monotone root windows.

    The leftmost optimal root of [i, j] lies between the leftmost
    optimal roots of [i, j-1] and [i+1, j]; scanning only that window
    keeps total scan work quadratic.  Falls back to the full range if
    a stored window ever degenerates, so the cost stays exact.
    """
    n = inst.n
    weights = inst.weights
    pre = [0] * (n + 1)
    for k in range(1, n + 1):
        pre[k] = pre[k - 1] + weights[k - 1]
    costs = [[0] * (n + 2) for _ in range(n + 2)]
    roots = [[0] * (n + 2) for _ in range(n + 2)]
    scans = 0
    for i in range(1, n + 1):
        costs[i][i] = weights[i - 1]
        roots[i][i] = i
    for length in range(2, n + 1):
        for i in range(1, n - length + 2):
            j = i + length - 1
            lo = roots[i][j - 1]
            hi = roots[i + 1][j]
            if not i <= lo <= hi <= j:
                lo, hi = i, j
            best = None
            best_r = lo
            for r in range(lo, hi + 1):
                scans += 1
                v = costs[i][r - 1] + costs[r + 1][j]
                if best is None or v < best:
                    best = v
                    best_r = r
            costs[i][j] = pre[j] - pre[i - 1] + best
            roots[i][j] = best_r
    return KYResult(costs[1][n], scans)
