"""Exhaustive-search reference solver."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocst import brute_force_optimal, cost, new_instance, solve_full, validate
from twocst.errors import PreconditionError


def test_hand_checked_values():
    assert brute_force_optimal(new_instance([7]))[0] == 0
    assert brute_force_optimal(new_instance([1, 1]))[0] == 2
    assert brute_force_optimal(new_instance([1, 10, 1]))[0] == 14
    # heavy key first via equality, the rest one deeper
    assert brute_force_optimal(new_instance([1, 1, 100]))[0] == 104


def test_oracle_tree_is_valid_and_priced_right():
    inst = new_instance([3, 0, 2, 5, 1])
    best, tree = brute_force_optimal(inst)
    assert validate(tree, inst).ok
    assert cost(tree, inst) == best


def test_key_subset_search():
    inst = new_instance([3, 0, 2, 5, 1])
    best, tree = brute_force_optimal(inst, keys=[2, 4, 5])
    assert validate(tree, inst, keys=[2, 4, 5]).ok
    assert cost(tree, inst) == best


def test_subset_preconditions():
    inst = new_instance([1, 2, 3])
    with pytest.raises(PreconditionError):
        brute_force_optimal(inst, keys=[])
    with pytest.raises(PreconditionError):
        brute_force_optimal(inst, keys=[1, 1])
    with pytest.raises(PreconditionError):
        brute_force_optimal(inst, keys=[0, 1])


def test_size_cap():
    with pytest.raises(PreconditionError):
        brute_force_optimal(new_instance([1] * 23))


@given(st.lists(st.integers(min_value=0, max_value=10), min_size=1, max_size=7))
@settings(max_examples=80, deadline=None)
def test_oracle_agrees_with_full_dp(ws):
    inst = new_instance(ws)
    best_oracle, _ = brute_force_optimal(inst)
    _t, best_dp, _tree = solve_full(inst)
    assert best_oracle == best_dp
