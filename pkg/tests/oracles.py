"""Brute-force reference implementations used only by the tests.

None of these share code paths with the library beyond plain tuples.
"""

import itertools


def factors(v):
    v = tuple(v)
    return {v[i:j] for i in range(len(v)) for j in range(i + 1, len(v) + 1)}


def applicable_oracle(u, v):
    """Enumerate every substitution whose images are words of length <= |v|.

    An image that can appear inside ``v`` must be a factor of ``v``, so only
    factors are enumerated; assignments whose instance is longer than ``v``
    are skipped.
    """
    u, v = tuple(u), tuple(v)
    distinct = list(dict.fromkeys(u))
    counts = [u.count(c) for c in distinct]
    cands = sorted(factors(v), key=len)
    target = "|" + "|".join(map(str, v)) + "|"
    for images in itertools.product(cands, repeat=len(distinct)):
        if sum(len(img) * k for img, k in zip(images, counts)) > len(v):
            continue
        sub = dict(zip(distinct, images))
        inst = tuple(x for c in u for x in sub[c])
        if "|" + "|".join(map(str, inst)) + "|" in target:
            return sub
    return None


def square_oracle(w):
    """Every factor, tested for being ``tt``."""
    w = tuple(w)
    for f in factors(w):
        h = len(f) // 2
        if len(f) % 2 == 0 and f[:h] == f[h:]:
            return True
    return False


def all_words(k, max_len):
    for L in range(1, max_len + 1):
        yield from itertools.product(range(k), repeat=L)


def canonical_pattern(u):
    ids = {}
    return tuple(ids.setdefault(c, len(ids)) for c in u)


def set_partitions(s):
    """All partitions of range(s) as frozensets of frozensets (recursive insertion)."""
    if s == 0:
        return [frozenset()]
    out = []
    for p in set_partitions(s - 1):
        blocks = list(p)
        out.append(frozenset(blocks + [frozenset({s - 1})]))
        for i, b in enumerate(blocks):
            nb = blocks[:i] + [b | {s - 1}] + blocks[i + 1:]
            out.append(frozenset(nb))
    return out


def lattice_join_oracle(leq, i, j):
    m = len(leq)
    ub = [k for k in range(m) if leq[i][k] and leq[j][k]]
    least = [k for k in ub if all(leq[k][l] for l in ub)]
    return least[0] if len(least) == 1 else None
