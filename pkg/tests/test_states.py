"""Canonical colorings: canonicalization and state enumeration."""

import random

import pytest

from chromagen.graphs import (cycle_graph, edgeless_graph, graph_from_edges,
                              path_graph)
from chromagen.states import canonicalize, enumerate_states, state_color_count

BELL = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52}


def random_graph(rng, m):
    edges = [(u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)
             if rng.random() < 0.5]
    return graph_from_edges(m, edges)


def is_restricted_growth(seq):
    if seq[0] != 1:
        return False
    top = 1
    for label in seq[1:]:
        if label > top + 1:
            return False
        top = max(top, label)
    return True


# ---------------------------------------------------------------------------
# canonicalize
# ---------------------------------------------------------------------------

def test_canonicalize_worked_example():
    assert canonicalize((3, 5, 1, 1, 3, 2)) == (1, 2, 3, 3, 1, 4)


def test_canonicalize_fixed_points_and_reversal():
    assert canonicalize((1, 1, 1)) == (1, 1, 1)
    assert canonicalize((3, 2, 1)) == (1, 2, 3)


def test_canonicalize_empty_rejected():
    with pytest.raises(ValueError):
        canonicalize(())


def test_canonicalize_idempotent_and_relabel_invariant():
    rng = random.Random(99)
    for _ in range(500):
        length = rng.randint(1, 8)
        coloring = tuple(rng.randint(1, 9) for _ in range(length))
        canon = canonicalize(coloring)
        assert is_restricted_growth(canon)
        assert canonicalize(canon) == canon
        # any injective renaming of colors leads to the same canonical form
        values = sorted(set(coloring))
        images = rng.sample(range(1, 40), len(values))
        sigma = dict(zip(values, images))
        assert canonicalize(tuple(sigma[c] for c in coloring)) == canon


# ---------------------------------------------------------------------------
# state_color_count
# ---------------------------------------------------------------------------

def test_state_color_count():
    assert state_color_count((1, 2, 1)) == 2
    assert state_color_count((1, 2, 3)) == 3
    assert state_color_count((1, 1, 1)) == 1


# ---------------------------------------------------------------------------
# enumerate_states
# ---------------------------------------------------------------------------

def test_states_of_path_three():
    assert enumerate_states(path_graph(3)) == [(1, 2, 1), (1, 2, 3)]


def test_states_of_edgeless_three():
    assert enumerate_states(edgeless_graph(3)) == [
        (1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3)]


def test_states_of_triangle():
    assert enumerate_states(cycle_graph(3)) == [(1, 2, 3)]


def test_edgeless_states_hit_bell_numbers():
    for m, bell in BELL.items():
        assert len(enumerate_states(edgeless_graph(m))) == bell


def test_path_states_are_previous_bell_numbers():
    for m in range(2, 6):
        assert len(enumerate_states(path_graph(m))) == BELL[m - 1]


def test_states_bounded_by_bell_and_proper():
    rng = random.Random(4)
    for _ in range(100):
        m = rng.randint(1, 5)
        graph = random_graph(rng, m)
        states = enumerate_states(graph)
        assert len(states) <= BELL[m]
        for state in states:
            assert is_restricted_growth(state)
            assert state_color_count(state) == max(state)
            for (u, v) in graph.edges:
                assert state[u - 1] != state[v - 1]
        assert states == sorted(states)  # lexicographic order
        assert len(set(states)) == len(states)


def test_states_are_exactly_canonical_proper_colorings():
    # cross-check the DFS against filtering all restricted-growth sequences
    from itertools import product
    rng = random.Random(8)
    for _ in range(10):
        m = rng.randint(1, 4)
        graph = random_graph(rng, m)
        brute = []
        for labels in product(range(1, m + 1), repeat=m):
            if canonicalize(labels) != labels:
                continue
            if any(labels[u - 1] == labels[v - 1] for (u, v) in graph.edges):
                continue
            brute.append(labels)
        assert enumerate_states(graph) == sorted(brute)
