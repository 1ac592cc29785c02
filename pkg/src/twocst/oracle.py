"""Exhaustive reference solver, independent of the level DP.

Enumerates every comparison tree over subsets of the key set with a
bitmask memo: at each subset, try an equality test on every member and
a cut between every adjacent member pair.  Exponential, so it is gated
to at most 22 keys; its job is to certify the clever solvers on small
instances, so it shares no recurrence or table code with them.
"""

from __future__ import annotations

from .errors import PreconditionError
from .instance import WeightedInstance
from .tree import EqNode, Leaf, LtNode, Node

MAX_ORACLE_KEYS = 22


def brute_force_optimal(
    inst: WeightedInstance, keys: list[int] | None = None
) -> tuple[int, Node]:
    """(optimal cost, one optimal tree) by exhaustive search.

    ``keys`` restricts the search to a subset of the instance's keys;
    ties resolve to the first candidate found scanning equality tests
    in ascending key order, then cuts left to right.
    """
    if keys is None:
        keys = list(range(1, inst.n + 1))
    kset = sorted(set(keys))
    if not kset:
        raise PreconditionError("empty key set")
    if len(kset) != len(keys):
        raise PreconditionError("duplicate keys")
    if kset[0] < 1 or kset[-1] > inst.n:
        raise PreconditionError(f"keys outside 1..{inst.n}")
    m = len(kset)
    if m > MAX_ORACLE_KEYS:
        raise PreconditionError(f"{m} keys exceeds the brute-force cap of {MAX_ORACLE_KEYS}")

    wts = [inst.weight_of(k) for k in kset]
    memo: dict[int, tuple[int, tuple]] = {}

    def best(mask: int) -> tuple[int, tuple]:
        got = memo.get(mask)
        if got is not None:
            return got
        idxs = [t for t in range(m) if mask >> t & 1]
        if len(idxs) == 1:
            res = (0, ("leaf", idxs[0]))
            memo[mask] = res
            return res
        w = sum(wts[t] for t in idxs)
        bc: int | None = None
        bch: tuple | None = None
        for t in idxs:
            c = w + best(mask & ~(1 << t))[0]
            if bc is None or c < bc:
                bc, bch = c, ("eq", t)
        pref = 0
        for t in idxs[:-1]:
            pref |= 1 << t
            c = w + best(pref)[0] + best(mask & ~pref)[0]
            if c < bc:
                bc, bch = c, ("cut", t, pref)
        res = (bc, bch)
        memo[mask] = res
        return res

    full = (1 << m) - 1
    total = best(full)[0]

    def build(mask: int) -> Node:
        choice = memo[mask][1]
        if choice[0] == "leaf":
            return Leaf(kset[choice[1]])
        if choice[0] == "eq":
            t = choice[1]
            return EqNode(kset[t], Leaf(kset[t]), build(mask & ~(1 << t)))
        _, t, pref = choice
        return LtNode(kset[t] + 1, build(pref), build(mask & ~pref))

    return total, build(full)
