"""Canonical proper-coloring states of a layer graph.

Two proper colorings of the same graph behave identically as far as the next
layer is concerned when they use the same partition of vertices into color
classes.  The canonical representative renames colors in order of first
appearance (vertex 1 gets color 1, the first vertex with a new color gets
color 2, and so on), producing a restricted-growth sequence.  The set of all
such canonical colorings is the state space of the transfer matrix; for an
edgeless graph it is in bijection with set partitions, so the Bell number
B_m bounds the state count.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph, adjacency

# A canonical state is a plain tuple of color labels, e.g. (1, 2, 1).
CanonState = tuple[int, ...]


def canonicalize(coloring: Sequence[int]) -> CanonState:
    """Rename colors by first appearance: 351132 becomes 123314.

    The result satisfies the restricted-growth condition: first label 1 and
    each label at most one more than the maximum before it.
    """
    if not coloring:
        raise ValueError("coloring must be nonempty")
    renaming: dict[int, int] = {}
    out = []
    for color in coloring:
        out.append(renaming.setdefault(color, len(renaming) + 1))
    return tuple(out)


def state_color_count(state: CanonState) -> int:
    """Number of distinct colors k; for a canonical state this is max(state)."""
    return max(state)


def enumerate_states(graph: Graph) -> list[CanonState]:
    """All canonical proper colorings of `graph`, in lexicographic order.

    Depth-first extension of restricted-growth prefixes; a label is rejected
    as soon as it collides with an already-placed neighbor, so dense graphs
    prune far below the Bell-number worst case.
    """
    neighbors = adjacency(graph)
    m = graph.m
    states: list[CanonState] = []
    prefix: list[int] = []

    def extend(used: int) -> None:
        i = len(prefix)
        if i == m:
            states.append(tuple(prefix))
            return
        vertex = i + 1
        blocked = {prefix[j - 1] for j in neighbors[vertex] if j <= i}
        for label in range(1, used + 2):
            if label in blocked:
                continue
            prefix.append(label)
            extend(max(used, label))
            prefix.pop()

    extend(0)
    return states
