#!/usr/bin/env python3
"""Trust, but verify.

The symbolic pipeline and the brute-force oracle share nothing: the oracle
explicitly builds the n-layer graph, counts proper colorings by backtracking,
and interpolates the chromatic polynomial.  Agreement of the two is strong
evidence both are right.
"""

from chromagen import (build_layered_graph, chromatic_poly_bruteforce,
                       count_proper_colorings, cycle_graph,
                       monogamy_connector, path_graph, verify_series)

grid = build_layered_graph(path_graph(2), monogamy_connector(2), 2)
print("the 2x2 grid is a 4-cycle; its coloring counts at c0 = 0..4:")
print(" ", [count_proper_colorings(grid, c0) for c0 in range(5)])
print("  interpolated polynomial:", chromatic_poly_bruteforce(grid))
print()

for label, base, connector, order in [
    ("width-3 grids", path_graph(3), monogamy_connector(3), 4),
    ("triangle stacks", cycle_graph(3), monogamy_connector(3), 4),
]:
    print(f"{label}, n = 1..{order}:")
    report = verify_series(base, connector, order)
    for check in report.checks:
        print(f"  n={check.n} {'OK' if check.ok else 'MISMATCH'}")
    print(f"  => {'PASS' if report.passed else 'FAIL'}")
    print()
