"""
Modular elements and the separation arguments
=============================================

Lower-modular: ``x <= y`` implies ``(z v x) ^ y = (z ^ y) v x``.
"""

from epivar.lattice import (
    all_lattices,
    antichain_separation_check,
    chain_separation_check,
    equivalence_lattice,
    hasse_dot,
    lower_modular_elements,
    nonsingleton_class_count,
    pentagon,
    separation_mutation_witness,
    upper_modular_elements,
    verify_vv_proposition,
)

N = pentagon()
print("N5 lower-modular:", [N.labels[x] for x in lower_modular_elements(N)])
print(hasse_dot(N, name="N5"))

# In Eq(4) the upper-modular partitions are those with at most one non-singleton block
L, parts = equivalence_lattice(4)
for x in upper_modular_elements(L):
    print(parts[x], nonsingleton_class_count(parts[x]))
print([verify_vv_proposition(s)[0] for s in range(1, 7)])

# Both separation arguments only use lower-modularity of one element,
# and hold on every small lattice.
corpus = all_lattices(6)
print(len(corpus), "lattices,",
      all(chain_separation_check(L)[0] and antichain_separation_check(L)[0] for L in corpus))

# Dropping that hypothesis breaks the chain argument already in N5.
c1, c2, e = separation_mutation_witness(N)
print("c1, c2, e =", N.labels[c1], N.labels[c2], N.labels[e])
