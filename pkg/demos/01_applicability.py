"""
Applicability of words
======================

A word ``u`` is applicable to ``v`` when some factor of ``v`` is obtained from
``u`` by replacing each letter with a non-empty word.  ``xx`` is applicable
exactly to the words that contain a square.
"""

from epivar.words import (
    contains_square,
    enumerate_square_free,
    format_word,
    is_applicable,
    parse_word,
)

W = parse_word

# A witness records the substitution and where its image sits in the target.
wit = is_applicable(W("xyx"), W("cabcab"))
print({format_word((k,)): format_word(v) for k, v in wit.substitution.items()},
      "on", (wit.start, wit.end))

# The decision is exact, so a negative answer is a proof of absence.
print("xx -> aba:", is_applicable(W("xx"), W("aba")))

# Squares, found directly and through applicability of xx.
for text in ["abcacb", "abcbc", "abacaba"]:
    w = W(text)
    print(text, contains_square(w), is_applicable(W("xx"), w) is not None)

# Over two letters only six words avoid squares.
print([format_word(w) for w in enumerate_square_free(2, 10)])

# Over three letters the count keeps growing with the length.
counts = {}
for w in enumerate_square_free(3, 15):
    counts[len(w)] = counts.get(len(w), 0) + 1
print(counts)
