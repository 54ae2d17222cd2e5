#!/usr/bin/env python3
"""Beyond grids: arbitrary connectors between layers.

The layers do not have to be glued vertex-to-vertex.  Any set of ordered
pairs [alpha, beta] works: [alpha, beta] joins vertex alpha of one layer to
vertex beta of the next.  Three examples on two-vertex layers.
"""

from chromagen import (connector_from_pairs, edgeless_graph,
                       generating_function, path_graph)

layers = edgeless_graph(2)

print("no connector: layers are independent, so coefficients are powers of c^2")
gf = generating_function(layers, connector_from_pairs(2, []))
print(f"  F = {gf.value}")
print(f"  series: {[str(p) for p in gf.series(3)]}")
print()

print("crossed connector {[1,2],[2,1]}: each vertex faces the other's twin")
gf = generating_function(layers, connector_from_pairs(2, [(1, 2), (2, 1)]))
print(f"  F = {gf.value}")
print(f"  series: {[str(p) for p in gf.series(3)]}")
print()

print("one-sided ladder: rail edges in each layer, a single rung {[1,1]}")
gf = generating_function(path_graph(2), connector_from_pairs(2, [(1, 1)]))
print(f"  F = {gf.value}")
print(f"  series: {[str(p) for p in gf.series(3)]}")
print("  (each extra layer multiplies the count by (c-1)^2: one rail")
print("  constraint and one rung constraint)")
