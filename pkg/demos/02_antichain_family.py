"""
A certified anti-chain of square-free words
===========================================

The family members are indexed by rationals.  The index order is
0, 1, -1, 1/2, -1/2, 2, -2, ... (Calkin-Wilf, with negatives interleaved).
"""

from epivar.antichain import (
    GenerationExhausted,
    format_rational,
    generate_family,
    rational_of_nat,
    verify_antichain,
)
from epivar.words import format_word

print([format_rational(rational_of_nat(n)) for n in range(12)])

family = generate_family(12)
for m in family:
    print(f"{format_rational(m.index):>6}  {format_word(m.word)}")

cert = verify_antichain(family)
print(f"{cert.checked_pairs} ordered pairs checked, {cert.squarefree_checked} words square-free")

# Short minimum lengths run dry quickly: all five length-5 shapes get admitted
# and every longer ternary square-free word contains one of them.
try:
    generate_family(6, min_length=5, max_length=10)
except GenerationExhausted as exc:
    print("exhausted:", exc)
