"""Classic three-way-comparison baseline solvers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocst import new_instance, solve_3wcst_cubic, solve_3wcst_knuth_yao
from twocst.errors import PreconditionError

WEIGHTS = st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=18)


def brute_threeway(ws):
    """Independent reference: try every root recursively, no tables."""

    def best(i, j):
        if i > j:
            return 0
        total = sum(ws[i - 1 : j])
        return total + min(best(i, r - 1) + best(r + 1, j) for r in range(i, j + 1))

    return best(1, len(ws))


def test_hand_values():
    # keys sit at internal nodes, so even a lone key pays one comparison
    assert solve_3wcst_cubic(new_instance([5])) == 5
    assert solve_3wcst_cubic(new_instance([1, 1])) == 3
    assert solve_3wcst_cubic(new_instance([1, 1, 100])) == 105
    assert solve_3wcst_cubic(new_instance([1, 10, 1])) == 14


def test_balanced_closed_form():
    # equal weights on 2^s - 1 keys: the perfectly balanced tree is optimal
    for s in range(1, 7):
        n = 2**s - 1
        want = sum(2**d * (d + 1) for d in range(s))
        assert solve_3wcst_cubic(new_instance([1] * n)) == want


@given(st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=9))
@settings(max_examples=60, deadline=None)
def test_cubic_matches_rootwise_recursion(ws):
    inst = new_instance(ws)
    assert solve_3wcst_cubic(inst) == brute_threeway(list(ws))


@given(WEIGHTS)
@settings(max_examples=120, deadline=None)
def test_knuth_yao_matches_cubic(ws):
    inst = new_instance(ws)
    result = solve_3wcst_knuth_yao(inst)
    assert result.cost == solve_3wcst_cubic(inst)


def test_knuth_yao_scan_counts_equal_weights():
    # window-restricted root search: exactly n*(n-1) scans on equal weights
    for n in (8, 16, 32, 64):
        result = solve_3wcst_knuth_yao(new_instance([1] * n))
        assert result.root_scans == n * (n - 1)
        assert result.root_scans <= n * n


def test_knuth_yao_scans_grow_quadratically():
    import random

    rng = random.Random(0)
    for n in (20, 40, 80):
        inst = new_instance([rng.randint(1, 9) for _ in range(n)])
        result = solve_3wcst_knuth_yao(inst)
        assert result.root_scans <= 4 * n * n
