"""Graphs, inter-layer connectors, and the layered-graph construction.

A layered graph stacks n copies of a base graph G (vertices 1..m) and joins
consecutive copies with the edges of a connector C, a set of ordered pairs
[alpha, beta]: pair [alpha, beta] puts an edge between vertex alpha of one
layer and vertex beta of the next.  With the monogamy connector
{[i, i] : i <= m} the result is exactly the Cartesian product of G with a
path on n vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class GraphParseError(ValueError):
    """Malformed graph or connector text; the message names the line."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..m; edges stored as (u, v), u < v."""

    m: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("vertex count must be positive")
        for (u, v) in self.edges:
            if not (1 <= u < v <= self.m):
                raise ValueError(f"edge ({u},{v}) is not normalized or out of range")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Connector:
    """Ordered pairs [alpha, beta] of inter-layer edges between 1..m and 1..m."""

    m: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("vertex count must be positive")
        for (a, b) in self.pairs:
            if not (1 <= a <= self.m and 1 <= b <= self.m):
                raise ValueError(f"connector pair [{a},{b}] out of range")


def graph_from_edges(m: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph, normalizing edge order and rejecting loops/duplicates."""
    seen: set[tuple[int, int]] = set()
    for (u, v) in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (1 <= u <= m and 1 <= v <= m):
            raise ValueError(f"edge ({u},{v}) out of range 1..{m}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
    return Graph(m, frozenset(seen))


def connector_from_pairs(m: int, pairs: Iterable[tuple[int, int]]) -> Connector:
    seen: set[tuple[int, int]] = set()
    for (a, b) in pairs:
        if not (1 <= a <= m and 1 <= b <= m):
            raise ValueError(f"connector pair [{a},{b}] out of range 1..{m}")
        if (a, b) in seen:
            raise ValueError(f"duplicate connector pair [{a},{b}]")
        seen.add((a, b))
    return Connector(m, frozenset(seen))


def path_graph(m: int) -> Graph:
    """Path on m vertices: edges {i, i+1}."""
    if m < 1:
        raise ValueError("m must be positive")
    return Graph(m, frozenset((i, i + 1) for i in range(1, m)))


def edgeless_graph(m: int) -> Graph:
    if m < 1:
        raise ValueError("m must be positive")
    return Graph(m, frozenset())


def cycle_graph(m: int) -> Graph:
    """Cycle on m >= 3 vertices."""
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, m)] + [(1, m)]
    return graph_from_edges(m, edges)


def monogamy_connector(m: int) -> Connector:
    """The connector {[i, i] : 1 <= i <= m} that glues layer i to layer i+1
    vertexwise; layering with it is the Cartesian product with a path."""
    if m < 1:
        raise ValueError("m must be positive")
    return Connector(m, frozenset((i, i) for i in range(1, m + 1)))


def adjacency(graph: Graph) -> list[set[int]]:
    """Neighbor sets indexed 1..m (index 0 unused)."""
    neighbors: list[set[int]] = [set() for _ in range(graph.m + 1)]
    for (u, v) in graph.edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    return neighbors


def build_layered_graph(base: Graph, connector: Connector, n: int) -> Graph:
    """The graph on m*n vertices with n copies of `base` joined by `connector`.

    Layer i (0-based) occupies vertices 1+i*m .. m+i*m and copies the edges
    of `base`; each connector pair [alpha, beta] adds the edge
    {alpha+i*m, beta+(i+1)*m} for every i < n-1.  Coincident edges are
    stored once.
    """
    if base.m != connector.m:
        raise ValueError(f"graph has m={base.m} but connector has m={connector.m}")
    if n < 1:
        raise ValueError("layer count must be positive")
    m = base.m
    edges: set[tuple[int, int]] = set()
    for i in range(n):
        off = i * m
        for (u, v) in base.edges:
            edges.add((u + off, v + off))
    for i in range(n - 1):
        off = i * m
        for (a, b) in connector.pairs:
            u, v = a + off, b + off + m
            edges.add((min(u, v), max(u, v)))
    return Graph(m * n, frozenset(edges))


def _parse_records(text: str, record_tag: str, kind: str) -> tuple[int, list[tuple[int, int, int]]]:
    """Shared line-format parser: a 'm <int>' header then '<tag> <i> <j>' rows.

    Returns (m, [(lineno, i, j), ...]).  '#' lines and blank lines are skipped.
    """
    m: int | None = None
    rows: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "m":
            if m is not None:
                raise GraphParseError(f"line {lineno}: duplicate 'm' record")
            if len(tokens) != 2 or not _is_int(tokens[1]):
                raise GraphParseError(f"line {lineno}: malformed 'm' record {line!r}")
            m = int(tokens[1])
            if m < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be positive")
        elif tokens[0] == record_tag:
            if m is None:
                raise GraphParseError(f"line {lineno}: '{record_tag}' record before 'm'")
            if len(tokens) != 3 or not (_is_int(tokens[1]) and _is_int(tokens[2])):
                raise GraphParseError(f"line {lineno}: malformed {kind} record {line!r}")
            rows.append((lineno, int(tokens[1]), int(tokens[2])))
        else:
            raise GraphParseError(f"line {lineno}: unknown record {tokens[0]!r}")
    if m is None:
        raise GraphParseError(f"missing 'm' record in {kind} input")
    return m, rows


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: 'm <int>' then 'e <u> <v>' lines."""
    m, rows = _parse_records(text, "e", "graph")
    seen: set[tuple[int, int]] = set()
    for lineno, u, v in rows:
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (1 <= u <= m and 1 <= v <= m):
            raise GraphParseError(f"line {lineno}: vertex out of range 1..{m}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    return Graph(m, frozenset(seen))


def parse_connector(text: str) -> Connector:
    """Parse the connector format: 'm <int>' then 'p <alpha> <beta>' lines."""
    m, rows = _parse_records(text, "p", "connector")
    seen: set[tuple[int, int]] = set()
    for lineno, a, b in rows:
        if not (1 <= a <= m and 1 <= b <= m):
            raise GraphParseError(f"line {lineno}: connector endpoint out of range 1..{m}")
        if (a, b) in seen:
            raise GraphParseError(f"line {lineno}: duplicate connector pair [{a},{b}]")
        seen.add((a, b))
    return Connector(m, frozenset(seen))
