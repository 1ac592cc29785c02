"""Threshold-pruned solver, refined intervals, and the two bounded-weight
speedups."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocst import (
    cost,
    hard_instance,
    new_instance,
    refined_interval,
    solve_bounded_const,
    solve_bounded_log,
    solve_full,
    solve_pruned,
    validate,
)
from twocst.errors import PreconditionError, TwocstError

WEIGHTS = st.lists(st.integers(min_value=0, max_value=30), min_size=1, max_size=11)
POSITIVE = st.lists(st.integers(min_value=1, max_value=30), min_size=1, max_size=11)


@given(WEIGHTS)
@settings(max_examples=120, deadline=None)
def test_pruned_matches_full(ws):
    inst = new_instance(ws)
    _t, best_full, _tree = solve_full(inst)
    best, tree, _stats = solve_pruned(inst)
    assert best == best_full
    assert validate(tree, inst).ok
    assert cost(tree, inst) == best


class TestRefinedInterval:
    def test_needs_two_members(self):
        inst = new_instance([1, 2, 3])
        with pytest.raises(PreconditionError):
            refined_interval(inst, (1, 3, 1))

    def test_known_values(self):
        # equal weights: every middle-half cut is quarter-balanced
        inst = new_instance([1] * 8)
        iv = refined_interval(inst, (1, 8, 8))
        assert (iv.lo, iv.hi, iv.empty) == (2, 6, False)
        assert list(iv.positions()) == list(range(2, 7))
        assert 4 in iv and 1 not in iv and 7 not in iv

    def test_heavy_end_is_empty(self):
        # one end holds 10 of 12 units: no cut keeps a quarter on each side
        inst = new_instance([10, 1, 1])
        iv = refined_interval(inst, (1, 3, 3))
        assert iv.empty
        assert iv.width() == 0
        assert list(iv.positions()) == []

    @given(WEIGHTS, st.data())
    @settings(max_examples=150)
    def test_matches_linear_scan(self, ws, data):
        inst = new_instance(ws)
        n = inst.n
        i = data.draw(st.integers(1, n))
        j = data.draw(st.integers(i, n))
        h = data.draw(st.integers(0, n))
        if inst.sub_count(i, j, h) < 2:
            return
        w = inst.sub_weight(i, j, h)
        mn = inst.first_member(i, j, h)
        mx = inst.last_member(i, j, h)
        by_scan = [
            l
            for l in range(mn, mx)
            if 4 * inst.sub_weight(i, l, h) >= w and 4 * (w - inst.sub_weight(i, l, h)) >= w
        ]
        iv = refined_interval(inst, (i, j, h))
        assert list(iv.positions()) == by_scan
        # contiguity comes with the construction, but assert it anyway
        if by_scan:
            assert by_scan == list(range(by_scan[0], by_scan[-1] + 1))

    @given(st.integers(min_value=2, max_value=4000), st.integers(min_value=0, max_value=9))
    @settings(max_examples=60, deadline=None)
    def test_probe_count_is_logarithmic(self, n, seed):
        import random

        rng = random.Random(seed)
        inst = new_instance([rng.randint(0, 100) for _ in range(n)])
        probes = 0

        def counting(i, l, h):
            nonlocal probes
            probes += 1
            return inst.sub_weight(i, l, h)

        if inst.sub_count(1, n, n) < 2:
            return
        refined_interval(inst, (1, n, n), weight_fn=counting)
        assert probes <= 3 * (n.bit_length() + 2)


class TestCounters:
    def test_single_key_counts_one_state(self):
        _best, _tree, stats = solve_pruned(new_instance([5]))
        assert stats.subproblems_evaluated == 1
        assert stats.cutpoints_scanned == 0

    def test_heavy_top_prunes_cuts(self):
        # 7*wmax >= 3*W everywhere: every multi-key state resolves equality-only
        best, _tree, stats = solve_pruned(new_instance([1, 100, 1]))
        assert best == 104
        assert stats.cutpoints_scanned == 0
        assert stats.eq_prunes > 0
        assert stats.lt_prunes == 0

    def test_hard_family_frozen_counters(self):
        _best, _tree, stats = solve_pruned(hard_instance(28))
        assert stats.subproblems_evaluated == 3593
        assert stats.cutpoints_scanned == 3976
        assert stats.eq_prunes == 2858
        assert stats.lt_prunes == 0

    def test_csv_row_shape(self):
        from twocst.pruned import SolveStats

        _best, _tree, stats = solve_pruned(new_instance([1, 2, 3]))
        row = stats.to_csv_row("demo", 3, 1.5)
        assert len(row) == len(SolveStats.CSV_HEADER)
        assert row[0] == "demo"

    def test_branch_recording(self):
        _best, _tree, stats = solve_pruned(new_instance([2, 1, 2, 1]), record_branches=True)
        assert stats.branches
        assert set(stats.branches.values()) <= {"eq-only", "lt-only", "both", "leaf"}


class TestBoundedLog:
    def test_rejects_zero_weights(self):
        with pytest.raises(PreconditionError):
            solve_bounded_log(new_instance([1, 0, 2]))

    @given(POSITIVE)
    @settings(max_examples=80, deadline=None)
    def test_matches_full(self, ws):
        inst = new_instance(ws)
        _t, best_full, _tree = solve_full(inst)
        best, tree, _stats = solve_bounded_log(inst)
        assert best == best_full
        assert validate(tree, inst).ok

    def test_equal_weights_stay_shallow(self):
        # all-equal weights never exclude more than a couple of keys
        best, _tree, stats = solve_bounded_log(new_instance([1] * 16))
        assert best == 64
        assert stats.max_hole_depth == 2

    def test_geometric_ramp_goes_deep(self):
        best, _tree, stats = solve_bounded_log(new_instance([2**i for i in range(13)]))
        assert best == 16368
        assert stats.max_hole_depth == 11


class TestBoundedConst:
    def test_validates_weight_range(self):
        with pytest.raises(PreconditionError):
            solve_bounded_const(new_instance([1, 0, 2]), 3)
        with pytest.raises(PreconditionError):
            solve_bounded_const(new_instance([1, 9]), 3)

    def test_default_limit_is_max_weight(self):
        best, tree, _stats = solve_bounded_const(new_instance([2, 3, 1, 3]))
        _t, best_full, _tree = solve_full(new_instance([2, 3, 1, 3]))
        assert best == best_full

    @given(st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=14))
    @settings(max_examples=80, deadline=None)
    def test_matches_full_small_weights(self, ws):
        inst = new_instance(ws)
        _t, best_full, _tree = solve_full(inst)
        best, tree, _stats = solve_bounded_const(inst, 3)
        assert best == best_full
        assert validate(tree, inst).ok
        assert cost(tree, inst) == best

    def test_long_uniform_instance(self):
        # window size 4*limit = 4 stays far below n = 40
        inst = new_instance([1] * 40)
        best, tree, _stats = solve_bounded_const(inst, 1)
        _t, best_full, _ = solve_full(inst)
        assert best == best_full
        assert validate(tree, inst).ok


def test_zero_heavy_weights_agree_with_full():
    # zero-weight keys produce ties everywhere; the pruned solver must not drift
    import random

    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 10)
        ws = [rng.choice((0, 0, 1, 2, 9)) for _ in range(n)]
        inst = new_instance(ws)
        _t, best_full, _tree = solve_full(inst)
        best, tree, _stats = solve_pruned(inst)
        assert best == best_full
        assert validate(tree, inst).ok
