#!/usr/bin/env python3
"""Scan the two-bridge census for slope pairs the method can settle.

For each knot up to a Schubert-number bound: compute the classical
invariants, keep only knots where the cheap criteria are silent
(delta''(1) = 0 and tau = 0), generate the finitely many slope pairs
allowed by the Ni-Wu conditions, and run the non-orientable-surface
obstruction on each surviving pair.
"""

import math

from twobridge import (boyer_lines_obstructs, delta2_at_1, distinguish,
                       enumerate_knots, make_slope, niwu_filter, signature,
                       tau)

MAX_P = 100
MAX_SLOPE_NUM = 10

pairs = []
for p in range(2, MAX_SLOPE_NUM + 1, 2):
    for q in range(1, p):
        if math.gcd(p, q) == 1 and (q * q + 1) % p == 0:
            pairs.append((make_slope(p, q), make_slope(-p, q)))
print("candidate slope pairs:", [f"({a}, {b})" for a, b in pairs])
print()

survivors = 0
for k in enumerate_knots(MAX_P):
    if tau(k) != 0 or boyer_lines_obstructs(k):
        continue
    survivors += 1
    results = []
    for r1, r2 in pairs:
        assert niwu_filter(k, r1, r2).survives
        v = distinguish(k, r1, r2)
        results.append(f"({r1}, {r2}) {v.kind}")
    print(f"{str(k):<10} sigma={signature(k):+d} delta2={delta2_at_1(k)}  "
          + ", ".join(results))

print()
print(f"{survivors} of {len(enumerate_knots(MAX_P))} knots with p <= {MAX_P} "
      "pass the knot-level filters")
