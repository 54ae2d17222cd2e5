#!/usr/bin/env python3
"""Canonical coloring states.

A proper coloring matters to the next layer only through its partition into
color classes, so we rename colors in order of first appearance and work with
those canonical forms.  This script shows the renaming, enumerates the states
of a few layer graphs, and checks the Bell-number ceiling.
"""

from chromagen import canonicalize, enumerate_states, state_color_count
from chromagen import cycle_graph, edgeless_graph, path_graph

coloring = (3, 5, 1, 1, 3, 2)
print(f"coloring {coloring} canonicalizes to {canonicalize(coloring)}")
print(f"  ... and canonicalizing again is a fixed point: "
      f"{canonicalize(canonicalize(coloring))}")
print()

for label, graph in [("path on 3 vertices", path_graph(3)),
                     ("triangle", cycle_graph(3)),
                     ("3 isolated vertices", edgeless_graph(3))]:
    states = enumerate_states(graph)
    plural = "state" if len(states) == 1 else "states"
    print(f"{label}: {len(states)} {plural}")
    for state in states:
        digits = "".join(str(x) for x in state)
        print(f"  {digits}  ({state_color_count(state)} colors)")
    print()

print("isolated vertices realize every set partition, so the counts")
print("climb the Bell numbers:")
for m in range(1, 6):
    print(f"  m={m}: {len(enumerate_states(edgeless_graph(m)))} states")
