"""
A chain of 0-reduced varieties
==============================

``C^n_xi`` is given by ``x^(n+1) = 0`` together with ``x_a^(n-1) Z_a = 0`` for
every pool index ``a >= xi``.  Raising ``xi`` drops identities, so the
varieties grow, and each step is strict.
"""

import itertools

from epivar.antichain import family_for_indices
from epivar.varieties import VarietySpec, build_variety, compare, parse_pool
from epivar.words import format_word

pool = parse_pool("-1..1/4")
family = family_for_indices(pool)

for n in (1, 2, 3):
    C = [build_variety(VarietySpec("C", n, xi, pool), family) for xi in pool]
    rels = {compare(a, b).relation for a, b in itertools.combinations(C, 2)}
    print(f"n={n}: pairwise relations for xi1 < xi2: {rels}")

# the witness for one step: an identity of the smaller variety that the larger one lacks
a = build_variety(VarietySpec("C", 2, pool[3], pool), family)
b = build_variety(VarietySpec("C", 2, pool[4], pool), family)
res = compare(a, b)
print(a.label, "vs", b.label, res.relation, format_word(res.witnesses["holds_in_a_not_b"]))
