"""The symbolic transfer matrix.

Entry (S, T) counts, as a polynomial in the number of colors c, the ways to
color a fresh layer in canonical state T given that the previous layer sits
in canonical state S, honoring the connector edges between the two layers.

The count is assembled from atomic events.  Write s for the number of colors
in S and k for the number in T.  Each color class t of T either reuses a
specific color of the old layer (one not forbidden for it by any connector
edge) or takes the "fresh" option: a color unused by the old layer entirely.
An atomic event fixes this choice for every class; classes reusing old colors
must reuse pairwise different ones, and an event with gamma fresh classes
contributes (c-s)(c-s-1)...(c-s-gamma+1) colorings, since the fresh classes
get distinct colors from the c-s unused ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import PolyC, falling_factorial_poly
from .graphs import Connector, Graph
from .states import CanonState, enumerate_states, state_color_count

# Marker for the fresh-color option in an option set.
FRESH = 0


@dataclass(frozen=True)
class TransferMatrix:
    """States in lexicographic order and the square array of counts;
    entries[i][j] counts transitions from states[i] to states[j]."""

    states: tuple[CanonState, ...]
    entries: tuple[tuple[PolyC, ...], ...]

    @property
    def size(self) -> int:
        return len(self.states)

    def entry(self, source: CanonState, target: CanonState) -> PolyC:
        i = self.states.index(source)
        j = self.states.index(target)
        return self.entries[i][j]


def forbidden_sets(source: CanonState, target: CanonState,
                   connector: Connector) -> tuple[frozenset[int], ...]:
    """Per color class of `target`, the old-layer colors it may not reuse.

    A connector pair [alpha, beta] joins old vertex alpha to new vertex beta,
    so the class of beta in `target` must avoid the color of alpha in
    `source`.  Returned tuple is indexed by class-1.
    """
    k = state_color_count(target)
    forb: list[set[int]] = [set() for _ in range(k)]
    for (alpha, beta) in connector.pairs:
        forb[target[beta - 1] - 1].add(source[alpha - 1])
    return tuple(frozenset(f) for f in forb)


def option_sets(source: CanonState, target: CanonState,
                connector: Connector) -> tuple[tuple[int, ...], ...]:
    """Per color class of `target`, its choices: the fresh marker (always
    available, since an unused color conflicts with nothing) followed by the
    old colors not forbidden for that class."""
    s = state_color_count(source)
    forb = forbidden_sets(source, target, connector)
    return tuple(
        (FRESH,) + tuple(sorted(set(range(1, s + 1)) - blocked))
        for blocked in forb
    )


def transfer_entry(source: CanonState, target: CanonState,
                   connector: Connector) -> PolyC:
    """Number of colorings of a new layer in state `target` compatible with a
    previous layer in state `source`, as a polynomial in c.

    Iterates the Cartesian product of the option sets, skipping events where
    two classes grab the same old color, and sums the falling-factorial
    weight of each event.
    """
    s = state_color_count(source)
    k = state_color_count(target)
    options = option_sets(source, target, connector)
    weights = {gamma: falling_factorial_poly(s, gamma) for gamma in range(k + 1)}
    total = PolyC.zero()
    for event in itertools.product(*options):
        old = [choice for choice in event if choice != FRESH]
        if len(old) != len(set(old)):
            continue
        total = total + weights[k - len(old)]
    return total


def transfer_matrix(base: Graph, connector: Connector) -> TransferMatrix:
    """Full transfer matrix of (base, connector) over the canonical states."""
    if base.m != connector.m:
        raise ValueError(f"graph has m={base.m} but connector has m={connector.m}")
    states = tuple(enumerate_states(base))
    entries = tuple(
        tuple(transfer_entry(s, t, connector) for t in states)
        for s in states
    )
    return TransferMatrix(states, entries)


def initial_vector(base: Graph) -> list[PolyC]:
    """Colorings of a single layer per state: a state with k classes is
    realized by c(c-1)...(c-k+1) actual colorings."""
    return [falling_factorial_poly(0, state_color_count(t))
            for t in enumerate_states(base)]
