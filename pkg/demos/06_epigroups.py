"""
Finite semigroups as epigroups
==============================

Pseudo-inverse, index, and the identities of E_n, computed from Cayley tables.
"""

from collections import Counter

from epivar.epigroups import FiniteSemigroup, analyze, check_E_n, enumerate_semigroups

# n, n^2, n^3 = 0
nil3 = FiniteSemigroup([[0, 0, 0], [0, 2, 0], [0, 0, 0]])
st = analyze(nil3)
print("index", st.index, "pseudo-inverse", st.pseudo_inverse)
for n in (2, 3):
    print(n, [(r.name, r.holds, r.counterexample) for r in check_E_n(nil3, n)])

# index distribution over all labelled associative tables of order 3
dist = Counter(analyze(S).index for S in enumerate_semigroups(3))
print(sorted(dist.items()))
