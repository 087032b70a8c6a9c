"""Words, 0-reduced varieties, finite lattices and finite epigroups.

Computational companion to the chain and anti-chain constructions in the
interval [E_n, E_{n+1}] of the lattice of epigroup varieties.
"""

__version__ = "0.1.0"
