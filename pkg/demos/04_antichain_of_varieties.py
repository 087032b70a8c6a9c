"""
An anti-chain of 0-reduced varieties
====================================

``A^n_xi`` uses the indices in the open interval ``(xi - 1, xi + 1)``.  Two
such varieties are incomparable as soon as each interval holds a pool index
missing from the other.
"""

import itertools

from epivar.antichain import family_for_indices
from epivar.varieties import VarietySpec, build_variety, compare, parse_pool

pool = parse_pool("-2..2/4")
family = family_for_indices(pool)

n = 1
A = {xi: build_variety(VarietySpec("A", n, xi, pool), family) for xi in pool}
tally = {}
for x1, x2 in itertools.combinations(pool, 2):
    rel = compare(A[x1], A[x2]).relation
    tally[rel] = tally.get(rel, 0) + 1
print(tally)

# Comparable pairs only appear where the pool cuts an interval short.
for x1, x2 in itertools.combinations(pool, 2):
    rel = compare(A[x1], A[x2]).relation
    if rel != "incomparable":
        print(f"  {x1} vs {x2}: {rel}")
        break
