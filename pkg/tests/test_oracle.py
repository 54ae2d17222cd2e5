"""The brute-force oracle itself, validated by naive enumeration and
classical closed forms."""

from itertools import product

import pytest

from chromagen.algebra import PolyC
from chromagen.graphs import (build_layered_graph, connector_from_pairs,
                              cycle_graph, edgeless_graph, graph_from_edges,
                              monogamy_connector, path_graph)
from chromagen.oracle import (ORACLE_VERTEX_LIMIT, OracleLimitError,
                              chromatic_poly_bruteforce,
                              count_proper_colorings, verify_series)

C = PolyC.c()


def naive_count(graph, palette_size):
    """Reference count by enumerating every coloring function directly."""
    count = 0
    for coloring in product(range(1, palette_size + 1), repeat=graph.m):
        if all(coloring[u - 1] != coloring[v - 1] for (u, v) in graph.edges):
            count += 1
    return count


def path_poly(n):
    p = C
    for _ in range(n - 1):
        p = p * (C - 1)
    return p


def cycle_poly(n):
    sign = 1 if n % 2 == 0 else -1
    return (C - 1) ** n + sign * (C - 1)


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def test_count_examples():
    assert count_proper_colorings(cycle_graph(3), 3) == 6
    assert count_proper_colorings(path_graph(3), 2) == 2
    grid = build_layered_graph(path_graph(3), monogamy_connector(3), 2)
    assert count_proper_colorings(grid, 2) == 2


def test_count_agrees_with_naive_enumeration():
    import random
    rng = random.Random(3)
    for _ in range(15):
        m = rng.randint(1, 6)
        edges = [(u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)
                 if rng.random() < 0.5]
        graph = graph_from_edges(m, edges)
        for palette in range(0, 5):
            assert count_proper_colorings(graph, palette) == \
                naive_count(graph, palette)


def test_count_monotone_in_palette():
    grid = build_layered_graph(path_graph(3), monogamy_connector(3), 3)
    counts = [count_proper_colorings(grid, c0) for c0 in range(10)]
    assert counts == sorted(counts)


def test_count_rejects_negative_palette():
    with pytest.raises(ValueError):
        count_proper_colorings(path_graph(2), -1)


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------

def test_poly_of_path_three():
    assert chromatic_poly_bruteforce(path_graph(3)) == PolyC([0, 1, -2, 1])


def test_poly_of_triangle():
    assert chromatic_poly_bruteforce(cycle_graph(3)) == C * (C - 1) * (C - 2)


def test_poly_of_square_grid():
    # counts at c0 = 0..4 are 0, 0, 2, 18, 84
    grid = build_layered_graph(path_graph(2), monogamy_connector(2), 2)
    assert [count_proper_colorings(grid, c0) for c0 in range(5)] == \
        [0, 0, 2, 18, 84]
    poly = chromatic_poly_bruteforce(grid)
    assert poly == PolyC([0, -3, 6, -4, 1])
    assert poly == cycle_poly(4)  # the 2x2 grid is a 4-cycle


def test_poly_matches_classical_paths_and_cycles():
    for n in range(1, 7):
        assert chromatic_poly_bruteforce(path_graph(n)) == path_poly(n)
    for n in range(3, 7):
        assert chromatic_poly_bruteforce(cycle_graph(n)) == cycle_poly(n)


def test_poly_self_consistency_and_shape():
    grid = build_layered_graph(path_graph(3), monogamy_connector(3), 3)
    poly = chromatic_poly_bruteforce(grid)
    assert poly.degree == grid.m and poly.is_monic
    assert all(coeff.denominator == 1 for coeff in poly.coefficients)
    for c0 in range(grid.m + 1):
        assert poly(c0) == count_proper_colorings(grid, c0)


def test_poly_size_guard():
    big = edgeless_graph(ORACLE_VERTEX_LIMIT + 1)
    with pytest.raises(OracleLimitError, match="oracle size limit"):
        chromatic_poly_bruteforce(big)


# ---------------------------------------------------------------------------
# verify_series
# ---------------------------------------------------------------------------

def test_verify_ladder():
    report = verify_series(path_graph(2), monogamy_connector(2), 4)
    assert report.passed
    assert [check.n for check in report.checks] == [1, 2, 3, 4]


def test_verify_width_three_grid():
    assert verify_series(path_graph(3), monogamy_connector(3), 3).passed


def test_verify_independent_layers():
    report = verify_series(edgeless_graph(2), connector_from_pairs(2, []), 3)
    assert report.passed


def test_verify_guard():
    with pytest.raises(OracleLimitError, match="oracle size limit"):
        verify_series(path_graph(3), monogamy_connector(3), 5)


def test_verify_order_must_be_positive():
    with pytest.raises(ValueError):
        verify_series(path_graph(2), monogamy_connector(2), 0)
