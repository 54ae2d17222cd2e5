#!/usr/bin/env python3
"""Generating functions for grid graphs.

For each width m, the chromatic polynomials of the m x n grids are the series
coefficients of one rational function of z and c.  We solve for widths 1..4
and read off the polynomials, then count 3-colorings of some grids by plain
evaluation.
"""

import time

from chromagen import gf_grid

for m in range(1, 5):
    start = time.perf_counter()
    gf = gf_grid(m)
    elapsed = time.perf_counter() - start
    print(f"width {m} ({elapsed:.2f}s):")
    print(f"  F_{m}(z,c) = {gf.value}")
    coeffs = gf.series(3)
    for n in range(1, 4):
        print(f"  P(grid {m}x{n}) = {coeffs[n]}")
    print()

print("3-colorings of m x n grids (series coefficients evaluated at c=3):")
for m in range(1, 5):
    counts = [p(3) for p in gf_grid(m).series(5)[1:]]
    print(f"  width {m}: {counts}")
