"""Transfer-matrix entries and the initial layer vector."""

import random
from itertools import product

from chromagen.algebra import PolyC
from chromagen.graphs import (connector_from_pairs, cycle_graph,
                              edgeless_graph, graph_from_edges,
                              monogamy_connector, path_graph)
from chromagen.oracle import chromatic_poly_bruteforce
from chromagen.graphs import build_layered_graph
from chromagen.states import enumerate_states, state_color_count
from chromagen.transfer import (FRESH, forbidden_sets, initial_vector,
                                option_sets, transfer_entry, transfer_matrix)

C = PolyC.c()


def brute_force_extensions(base, connector, old_coloring, palette_size):
    """Count new-layer colorings proper on `base` and compatible with a
    concrete old layer, by direct enumeration (no states, no polynomials)."""
    m = base.m
    count = 0
    for new in product(range(1, palette_size + 1), repeat=m):
        if any(new[u - 1] == new[v - 1] for (u, v) in base.edges):
            continue
        if any(new[beta - 1] == old_coloring[alpha - 1]
               for (alpha, beta) in connector.pairs):
            continue
        count += 1
    return count


# ---------------------------------------------------------------------------
# forbidden sets
# ---------------------------------------------------------------------------

def test_forbidden_sets_worked_example():
    mono = monogamy_connector(3)
    forb = forbidden_sets((1, 2, 3), (1, 2, 1), mono)
    assert forb == (frozenset({1, 3}), frozenset({2}))


def test_forbidden_sets_empty_connector():
    empty = connector_from_pairs(3, [])
    assert forbidden_sets((1, 2, 3), (1, 2, 1), empty) == \
        (frozenset(), frozenset())


def test_forbidden_sets_repeated_class():
    mono = monogamy_connector(3)
    forb = forbidden_sets((1, 2, 1), (1, 2, 1), mono)
    assert forb == (frozenset({1}), frozenset({2}))


# ---------------------------------------------------------------------------
# option sets
# ---------------------------------------------------------------------------

def test_option_sets_worked_example():
    mono = monogamy_connector(3)
    assert option_sets((1, 2, 3), (1, 2, 1), mono) == ((0, 2), (0, 1, 3))


def test_option_sets_always_offer_fresh():
    for base, connector in CASES:
        states = enumerate_states(base)
        for source in states:
            s = state_color_count(source)
            for target in states:
                opts = option_sets(source, target, connector)
                assert len(opts) == state_color_count(target)
                forb = forbidden_sets(source, target, connector)
                for cls, choices in enumerate(opts):
                    assert choices[0] == FRESH
                    assert set(choices[1:]) == \
                        set(range(1, s + 1)) - forb[cls]


# ---------------------------------------------------------------------------
# entries: the four worked values for the width-3 grid
# ---------------------------------------------------------------------------

def test_entry_123_to_121():
    mono = monogamy_connector(3)
    assert transfer_entry((1, 2, 3), (1, 2, 1), mono) == C * C - 4 * C + 5


def test_entry_121_to_121():
    mono = monogamy_connector(3)
    assert transfer_entry((1, 2, 1), (1, 2, 1), mono) == C * C - 3 * C + 3


def test_entry_121_to_123():
    mono = monogamy_connector(3)
    assert transfer_entry((1, 2, 1), (1, 2, 3), mono) == \
        PolyC([-10, 13, -6, 1])


def test_entry_123_to_123():
    mono = monogamy_connector(3)
    assert transfer_entry((1, 2, 3), (1, 2, 3), mono) == \
        PolyC([-13, 14, -6, 1])


def test_entry_single_vertex():
    assert transfer_entry((1,), (1,), monogamy_connector(1)) == C - 1


def test_matrix_width_three():
    tm = transfer_matrix(path_graph(3), monogamy_connector(3))
    assert tm.states == ((1, 2, 1), (1, 2, 3))
    assert tm.entry((1, 2, 1), (1, 2, 1)) == PolyC([3, -3, 1])
    assert tm.entry((1, 2, 1), (1, 2, 3)) == PolyC([-10, 13, -6, 1])
    assert tm.entry((1, 2, 3), (1, 2, 1)) == PolyC([5, -4, 1])
    assert tm.entry((1, 2, 3), (1, 2, 3)) == PolyC([-13, 14, -6, 1])


def test_matrix_trivial_cases():
    tm = transfer_matrix(path_graph(1), monogamy_connector(1))
    assert tm.entries == ((C - 1,),)
    tm = transfer_matrix(edgeless_graph(1), connector_from_pairs(1, []))
    assert tm.entries == ((C,),)


def test_matrix_mismatched_m():
    import pytest
    with pytest.raises(ValueError):
        transfer_matrix(path_graph(2), monogamy_connector(3))


# ---------------------------------------------------------------------------
# initial vector
# ---------------------------------------------------------------------------

def test_initial_vector_path_three():
    init = initial_vector(path_graph(3))
    assert init == [C * (C - 1), C * (C - 1) * (C - 2)]
    # the two states together account for every coloring of one layer
    assert init[0] + init[1] == C * (C - 1) * (C - 1)


def test_initial_vector_edgeless():
    init = initial_vector(edgeless_graph(3))
    states = enumerate_states(edgeless_graph(3))
    assert init[states.index((1, 1, 1))] == C
    assert init[states.index((1, 2, 3))] == C * (C - 1) * (C - 2)


def test_initial_vector_sums_to_chromatic_polynomial():
    rng = random.Random(31)
    for _ in range(10):
        m = rng.randint(1, 4)
        edges = [(u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)
                 if rng.random() < 0.5]
        base = graph_from_edges(m, edges)
        total = PolyC.zero()
        for p in initial_vector(base):
            total = total + p
        assert total == chromatic_poly_bruteforce(base)


# ---------------------------------------------------------------------------
# matrix-level identities
# ---------------------------------------------------------------------------

CASES = [
    (path_graph(3), monogamy_connector(3)),
    (cycle_graph(3), monogamy_connector(3)),
    (edgeless_graph(2), connector_from_pairs(2, [(1, 2), (2, 1)])),
    (path_graph(2), connector_from_pairs(2, [(1, 1)])),
    (edgeless_graph(2), connector_from_pairs(2, [])),
]


def test_two_layer_column_sum_matches_oracle():
    for base, connector in CASES:
        tm = transfer_matrix(base, connector)
        init = initial_vector(base)
        total = PolyC.zero()
        for i in range(tm.size):
            for j in range(tm.size):
                total = total + init[i] * tm.entries[i][j]
        expected = chromatic_poly_bruteforce(
            build_layered_graph(base, connector, 2))
        assert total == expected


def test_row_sums_match_concrete_extension_counts():
    # the canonical state itself serves as a concrete coloring of the old
    # layer; counting needs at least that many colors in the palette
    for base, connector in CASES:
        tm = transfer_matrix(base, connector)
        for i, source in enumerate(tm.states):
            s = state_color_count(source)
            for palette in range(s, 7):
                row_total = sum(entry(palette) for entry in tm.entries[i])
                assert row_total == brute_force_extensions(
                    base, connector, source, palette)


def test_entries_are_monic_of_target_degree():
    for base, connector in CASES:
        tm = transfer_matrix(base, connector)
        for i in range(tm.size):
            for j, target in enumerate(tm.states):
                entry = tm.entries[i][j]
                assert entry.is_monic
                assert entry.degree == state_color_count(target)


def test_entries_nonnegative_integer_counts():
    # entries count extensions of a concrete layer in the source state, which
    # exists only for palettes of at least s colors; there the value is a count
    for base, connector in CASES:
        tm = transfer_matrix(base, connector)
        for i, source in enumerate(tm.states):
            s = state_color_count(source)
            for entry in tm.entries[i]:
                for c0 in range(s, s + 8):
                    value = entry(c0)
                    assert value.denominator == 1 and value >= 0
