#!/usr/bin/env python3
"""Building a symbolic transfer matrix.

Entry (S, T) counts the colorings of a new layer in state T that are
compatible with the previous layer sitting in state S, as an exact polynomial
in the palette size c.  We rebuild the 2x2 matrix for width-3 grid strips and
unpack one entry into its atomic events.
"""

from chromagen import (falling_factorial_poly, forbidden_sets,
                       monogamy_connector, path_graph, transfer_matrix)

base = path_graph(3)
mono = monogamy_connector(3)
tm = transfer_matrix(base, mono)

print("states:", tm.states)
print()
for i, source in enumerate(tm.states):
    for j, target in enumerate(tm.states):
        s = "".join(map(str, source))
        t = "".join(map(str, target))
        print(f"M[{s},{t}] = {tm.entries[i][j]}")
print()

# unpack M[123,121]: which old colors may each class of 121 reuse?
source, target = (1, 2, 3), (1, 2, 1)
forb = forbidden_sets(source, target, mono)
print(f"from {source} to {target}:")
for cls, blocked in enumerate(forb, start=1):
    allowed = sorted(set(range(1, 4)) - blocked)
    print(f"  class {cls} may reuse {allowed} or take a fresh color")
print()

print("events: both classes reuse (2 ways), one goes fresh (3 ways each),")
print("or both go fresh; fresh choices come from the c-3 unused colors:")
events = 2 * falling_factorial_poly(3, 0) \
    + 3 * falling_factorial_poly(3, 1) \
    + falling_factorial_poly(3, 2)
print(f"  2 + 3*(c-3) + (c-3)(c-4) = {events}")
print(f"  matrix agrees: {tm.entry(source, target) == events}")
