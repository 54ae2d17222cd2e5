"""Brute-force ground truth for chromatic polynomials.

Deliberately independent of the transfer-matrix pipeline: it works on the
explicitly built layered graph, never sees connectors or states, and counts
colorings by direct backtracking.  The backtracking walks color-usage
patterns (which earlier vertex shares a color with which) with adjacency
pruning and weights each completed pattern with k classes by
c0(c0-1)...(c0-k+1), so one search yields exact counts for every palette
size at once.  The chromatic polynomial is then recovered by Lagrange
interpolation through the counts at c0 = 0..|V|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import PolyC
from .genfunc import GenFunc, generating_function
from .graphs import Connector, Graph, build_layered_graph

# Backtracking is exponential in the vertex count; 12 keeps runs interactive.
ORACLE_VERTEX_LIMIT = 12


class OracleLimitError(ValueError):
    """Graph too large for the brute-force oracle."""


@lru_cache(maxsize=256)
def _color_class_pattern_counts(graph: Graph) -> tuple[int, ...]:
    """counts[k] = number of proper colorings with exactly k color classes,
    counted up to renaming of colors (backtracking with adjacency pruning)."""
    n = graph.m
    earlier: list[list[int]] = [[] for _ in range(n)]
    for (u, v) in graph.edges:
        earlier[v - 1].append(u - 1)
    counts = [0] * (n + 1)
    assigned = [0] * n

    def extend(i: int, k: int) -> None:
        if i == n:
            counts[k] += 1
            return
        used = 0
        for j in earlier[i]:
            used |= 1 << assigned[j]
        for cls in range(k):
            if not (used >> cls) & 1:
                assigned[i] = cls
                extend(i + 1, k)
        assigned[i] = k
        extend(i + 1, k + 1)

    extend(0, 0)
    return tuple(counts)


def count_proper_colorings(graph: Graph, palette_size: int) -> int:
    """Exact number of proper colorings with colors drawn from {1..palette_size}."""
    if palette_size < 0:
        raise ValueError("palette size must be nonnegative")
    total = 0
    for k, patterns in enumerate(_color_class_pattern_counts(graph)):
        if patterns == 0 or k > palette_size:
            continue
        ways = 1
        for j in range(k):
            ways *= palette_size - j
        total += patterns * ways
    return total


def chromatic_poly_bruteforce(graph: Graph) -> PolyC:
    """Chromatic polynomial by counting at c0 = 0..|V| and interpolating.

    The result is checked to be monic of degree |V| with integer
    coefficients; a violation would mean an arithmetic bug, not bad input.
    """
    n = graph.m
    if n > ORACLE_VERTEX_LIMIT:
        raise OracleLimitError(
            f"oracle size limit: {n} vertices exceeds {ORACLE_VERTEX_LIMIT}")
    counts = [count_proper_colorings(graph, c0) for c0 in range(n + 1)]
    poly = _lagrange_interpolate(counts)
    if poly.degree != n or not poly.is_monic:
        raise ArithmeticError("interpolated chromatic polynomial is not monic "
                              f"of degree {n}")
    if any(coeff.denominator != 1 for coeff in poly.coefficients):
        raise ArithmeticError("interpolated chromatic polynomial has "
                              "non-integer coefficients")
    return poly


def _lagrange_interpolate(values: list[int]) -> PolyC:
    """The unique polynomial of degree < len(values) through (i, values[i])."""
    nodes = range(len(values))
    result = PolyC.zero()
    for i in nodes:
        if values[i] == 0:
            continue
        basis = PolyC.one()
        denom = 1
        for j in nodes:
            if j == i:
                continue
            basis = basis * PolyC((-j, 1))
            denom *= i - j
        result = result + basis.scaled(Fraction(values[i], denom))
    return result


@dataclass(frozen=True)
class SeriesCheck:
    """Verdict for one layer count: does the series coefficient match?"""

    n: int
    ok: bool


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[SeriesCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.ok for check in self.checks)


def verify_series(base: Graph, connector: Connector, order: int,
                  genfunc: GenFunc | None = None) -> VerificationReport:
    """Compare series coefficients of the generating function against
    brute-force chromatic polynomials for n = 1..order.

    `genfunc` may be passed in to reuse an already-computed function.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if base.m * order > ORACLE_VERTEX_LIMIT:
        raise OracleLimitError(
            f"oracle size limit: {base.m}*{order} vertices exceeds "
            f"{ORACLE_VERTEX_LIMIT}")
    gf = genfunc if genfunc is not None else generating_function(base, connector)
    coeffs = gf.series(order)
    checks = []
    for n in range(1, order + 1):
        layered = build_layered_graph(base, connector, n)
        expected = chromatic_poly_bruteforce(layered)
        checks.append(SeriesCheck(n, coeffs[n] == expected))
    return VerificationReport(tuple(checks))
