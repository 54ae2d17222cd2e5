"""Generating functions for chromatic polynomials of layered graphs.

For a base graph G and connector C, the sum over n of the chromatic
polynomial of the n-layer graph times z^n is a rational function of z and c.
It is obtained by solving the linear system the transfer matrix induces on
the per-state generating functions f_T(z) = sum_n (colorings ending in state
T) z^n, namely (I - z M^T) f = z v with v the single-layer counts, and then
summing: F = 1 + sum_T f_T.  The leading 1 is the empty-graph term at z^0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import PolyC, PolyZC, RatFunc, series_coefficients, solve_linear_system
from .graphs import Connector, Graph, monogamy_connector, path_graph
from .transfer import initial_vector, transfer_matrix


@dataclass(frozen=True)
class GenFunc:
    """A generating function plus the convention marker for the z^0 term."""

    value: RatFunc
    includes_empty_term: bool = True

    def series(self, order: int) -> list[PolyC]:
        """Series coefficients p_0..p_order (p_0 = 1 with the empty term)."""
        return series_coefficients(self.value, order)

    def without_empty_term(self) -> "GenFunc":
        """The same series with the z^0 term dropped."""
        if not self.includes_empty_term:
            return self
        return GenFunc(self.value - 1, includes_empty_term=False)


def generating_function(base: Graph, connector: Connector) -> GenFunc:
    """The rational function whose z^n coefficient (n >= 1) is the chromatic
    polynomial of the n-layer graph of (base, connector)."""
    tm = transfer_matrix(base, connector)
    init = initial_vector(base)
    n = tm.size
    z = PolyZC.z()

    matrix = [
        [
            (PolyZC.one() if i == j else PolyZC.zero()) -
            z * PolyZC.from_polyc(tm.entries[j][i])
            for j in range(n)
        ]
        for i in range(n)
    ]
    rhs = [z * PolyZC.from_polyc(init[i]) for i in range(n)]

    total = RatFunc(1)
    for component in solve_linear_system(matrix, rhs):
        total = total + component
    return GenFunc(total)


def gf_cartesian(base: Graph) -> GenFunc:
    """Generating function for the Cartesian product of `base` with paths."""
    return generating_function(base, monogamy_connector(base.m))


def gf_grid(m: int) -> GenFunc:
    """Generating function for grid graphs of width m (paths times paths)."""
    return gf_cartesian(path_graph(m))
