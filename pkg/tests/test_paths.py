import random

import pytest
from hypothesis import given, settings, strategies as st

from consistent_subset import (
    AnchorConstraint,
    ContractError,
    feasible_pair,
    solve_path,
    solve_path_anchored,
)
from consistent_subset.graph import is_consistent
from consistent_subset.oracle import OracleConfig, oracle_mcs
from consistent_subset.paths import runs

from conftest import path_graph

colour_seqs = st.lists(st.integers(0, 2), min_size=1, max_size=11)


def brute_force_min(colours, anchor=None, forbidden=frozenset()):
    """Reference optimum by subset enumeration, smallest size first."""
    from itertools import combinations

    n = len(colours)
    g = path_graph(colours)
    allowed = [p for p in range(n) if p not in forbidden]
    for size in range(1, len(allowed) + 1):
        best = None
        for combo in combinations(allowed, size):
            if anchor is not None and anchor not in combo:
                continue
            if is_consistent(g, frozenset(combo)).valid:
                chosen = list(combo)
                if best is None or chosen < best:
                    best = chosen
        if best is not None:
            return best
    return None


def test_runs_detects_blocks():
    assert [(r.start, r.end, r.colour) for r in runs([0, 0, 1, 0])] == [
        (0, 1, 0),
        (2, 2, 1),
        (3, 3, 0),
    ]


def test_single_vertex():
    assert solve_path([5]) == [0]


def test_alternating_three_needs_all():
    assert solve_path([0, 1, 0]) == [0, 1, 2]


def test_two_runs_need_two():
    # {0, 2} works: vertex 1 ties between 0 and 2 and sees its colour
    assert solve_path([0, 0, 1, 1]) == [0, 2]


def test_feasible_pair_adjacent_always():
    assert feasible_pair([0, 1, 0, 1], 1, 2)


def test_feasible_pair_rejects_bad_order():
    with pytest.raises(ContractError):
        feasible_pair([0, 1], 1, 1)


def test_anchored_contains_anchor():
    out = solve_path_anchored([0, 1, 1, 0], AnchorConstraint(0))
    assert out is not None and 0 in out
    assert out == [0, 1, 3]


def test_anchored_infeasible_returns_none():
    # anchoring on 0 while forbidding every other selection fails
    assert solve_path_anchored([0, 1], AnchorConstraint(0, frozenset({1}))) is None


@given(colour_seqs)
@settings(max_examples=300, deadline=None)
def test_solve_path_matches_oracle(colours):
    got = solve_path(colours)
    want = oracle_mcs(path_graph(colours), OracleConfig()).size
    assert len(got) == want
    assert is_consistent(path_graph(colours), frozenset(got)).valid


@given(colour_seqs)
@settings(max_examples=200, deadline=None)
def test_solve_path_is_lexicographically_smallest(colours):
    assert solve_path(colours) == brute_force_min(colours)


@given(colour_seqs, st.integers(0, 100))
@settings(max_examples=200, deadline=None)
def test_anchored_matches_brute_force(colours, pick):
    anchor = pick % len(colours)
    got = solve_path_anchored(colours, AnchorConstraint(anchor))
    want = brute_force_min(colours, anchor=anchor)
    assert (got is None) == (want is None)
    if got is not None:
        assert len(got) == len(want)


@given(colour_seqs, st.integers(0, 100), st.integers(0, 10_000))
@settings(max_examples=200, deadline=None)
def test_anchored_with_forbidden_matches_brute_force(colours, pick, seed):
    anchor = pick % len(colours)
    rng = random.Random(seed)
    forbidden = frozenset(
        p for p in range(len(colours)) if p != anchor and rng.random() < 0.3
    )
    got = solve_path_anchored(colours, AnchorConstraint(anchor, forbidden))
    want = brute_force_min(colours, anchor=anchor, forbidden=forbidden)
    assert (got is None) == (want is None)
    if got is not None:
        assert len(got) == len(want)
        assert anchor in got and not (set(got) & forbidden)


@given(colour_seqs)
@settings(max_examples=100, deadline=None)
def test_shift_invariance(colours):
    shifted = [c + 1 for c in colours]
    assert solve_path(colours) == solve_path(shifted)


@given(colour_seqs)
@settings(max_examples=100, deadline=None)
def test_reversal_preserves_size(colours):
    assert len(solve_path(colours)) == len(solve_path(list(reversed(colours))))


@given(st.integers(1, 12))
def test_monochromatic_needs_one(n):
    assert len(solve_path([7] * n)) == 1


@given(colour_seqs, st.integers(0, 100))
@settings(max_examples=100, deadline=None)
def test_anchored_never_beats_plain(colours, pick):
    anchor = pick % len(colours)
    got = solve_path_anchored(colours, AnchorConstraint(anchor))
    assert got is not None
    assert len(got) >= len(solve_path(colours))
