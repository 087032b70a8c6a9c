"""Finite semigroups as epigroups: idempotent powers, pseudo-inverses, index.

Every finite semigroup is an epigroup.  For an element ``a`` the powers
``a, a^2, ...`` run into a cycle; that cycle is a cyclic group whose identity
``e_a`` is the unique idempotent power of ``a``.  The pseudo-inverse of ``a``
is the inverse of ``a e_a`` in that group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class NonAssociativeError(ValueError):
    def __init__(self, triple):
        x, y, z = triple
        super().__init__(f"(xy)z != x(yz) at x={x}, y={y}, z={z}")
        self.triple = triple


class SizeGuardError(ValueError):
    pass


class FiniteSemigroup:
    """Cayley table on ``range(order)``; ``table[x][y]`` is ``xy``."""

    def __init__(self, table):
        table = tuple(tuple(int(v) for v in row) for row in table)
        m = len(table)
        if m == 0 or any(len(row) != m for row in table):
            raise ValueError("Cayley table must be square and non-empty")
        if any(not 0 <= v < m for row in table for v in row):
            raise ValueError("table entries must be element ids 0..order-1")
        bad = _associativity_violation(table)
        if bad is not None:
            raise NonAssociativeError(bad)
        self.table = table
        self.order = m

    def mul(self, x, y):
        return self.table[x][y]

    def pow(self, x, k):
        if k < 1:
            raise ValueError("only positive powers exist in a semigroup")
        r = x
        for _ in range(k - 1):
            r = self.table[r][x]
        return r

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteSemigroup({[list(r) for r in self.table]})"


def _associativity_violation(table):
    m = len(table)
    for x, y, z in itertools.product(range(m), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            return x, y, z
    return None


@dataclass
class EpigroupStructure:
    base: FiniteSemigroup
    unit_of: tuple         # a -> e_a
    pseudo_inverse: tuple  # a -> pseudo-inverse of a
    element_index: tuple   # a -> least n with a^n in a subgroup
    index: int


def _monogenic(S, a):
    """``(tail, period)``: a^tail is the first power inside the cycle, which has length period."""
    seen = {}
    x, k = a, 1
    while x not in seen:
        seen[x] = k
        x, k = S.mul(x, a), k + 1
    tail = seen[x]
    return tail, k - tail


def analyze(S: FiniteSemigroup) -> EpigroupStructure:
    units, inverses, indices = [], [], []
    for a in range(S.order):
        tail, period = _monogenic(S, a)
        # the idempotent of the cycle is the power whose exponent is a multiple of the period
        k = -(-tail // period) * period
        e = S.pow(a, k)
        g = S.mul(a, e)
        t, x = 1, g
        while x != e:
            x, t = S.mul(x, g), t + 1
        inv = e if t == 1 else S.pow(g, t - 1)
        units.append(e)
        inverses.append(inv)
        indices.append(tail)
    return EpigroupStructure(S, tuple(units), tuple(inverses), tuple(indices), max(indices))


def epigroup_index(S: FiniteSemigroup) -> int:
    return max(_monogenic(S, a)[0] for a in range(S.order))


@dataclass
class IdentityCheckReport:
    name: str
    holds: bool
    counterexample: dict | None = None  # variable -> element


IDENTITY_NAMES = ("(xy)z = x(yz)", "x xbar = xbar x", "x xbar^2 = xbar", "x^(n+1) xbar = x^n")


def check_E_n(S: FiniteSemigroup, n: int, pseudo_inverse=None) -> list:
    """Evaluate the four identities defining E_n on ``S``.

    ``pseudo_inverse`` defaults to the computed one; pass a table to test a
    user-supplied unary operation instead.
    """
    if n < 1:
        raise ValueError("n must be positive")
    bar = tuple(pseudo_inverse) if pseudo_inverse is not None else analyze(S).pseudo_inverse
    mul = S.mul
    reports = []

    bad = _associativity_violation(S.table)
    reports.append(IdentityCheckReport(
        IDENTITY_NAMES[0], bad is None, dict(zip("xyz", bad)) if bad else None))

    unary = [
        (IDENTITY_NAMES[1], lambda x: mul(x, bar[x]), lambda x: mul(bar[x], x)),
        (IDENTITY_NAMES[2], lambda x: mul(x, mul(bar[x], bar[x])), lambda x: bar[x]),
        (IDENTITY_NAMES[3], lambda x: mul(S.pow(x, n + 1), bar[x]), lambda x: S.pow(x, n)),
    ]
    for name, lhs, rhs in unary:
        cx = next((x for x in range(S.order) if lhs(x) != rhs(x)), None)
        reports.append(IdentityCheckReport(name, cx is None, None if cx is None else {"x": cx}))
    return reports


def in_E_n(S: FiniteSemigroup, n: int) -> bool:
    return all(r.holds for r in check_E_n(S, n))


def enumerate_semigroups(order: int):
    """All associative Cayley tables on ``order <= 3`` labelled elements."""
    if not 1 <= order <= 3:
        raise SizeGuardError("semigroup enumeration is limited to order 1..3")
    m = order
    for flat in itertools.product(range(m), repeat=m * m):
        table = tuple(flat[i * m:(i + 1) * m] for i in range(m))
        if _associativity_violation(table) is None:
            yield FiniteSemigroup(table)


def structure_violations(st: EpigroupStructure) -> list:
    """Names of EpigroupStructure invariants that fail (empty when all hold)."""
    S = st.base
    mul = S.mul
    out = []
    for a in range(S.order):
        e, b = st.unit_of[a], st.pseudo_inverse[a]
        ae = mul(a, e)
        if mul(e, e) != e:
            out.append(f"e_{a} not idempotent")
        if ae != mul(e, a):
            out.append(f"a e_a != e_a a at a={a}")
        if mul(b, ae) != e or mul(ae, b) != e:
            out.append(f"pseudo-inverse is not the group inverse at a={a}")
        if mul(b, e) != b:
            out.append(f"pseudo-inverse outside the group of e_a at a={a}")
    if not 1 <= st.index <= S.order:
        out.append("index out of range")
    return out


# ----------------------------------------------------------------- I/O

def semigroup_from_json(data: dict) -> FiniteSemigroup:
    table = data["table"]
    if "order" in data and int(data["order"]) != len(table):
        raise ValueError("order does not match table size")
    return FiniteSemigroup(table)


def analysis_to_json(st: EpigroupStructure, n: int | None = None) -> dict:
    n = st.index if n is None else n
    reports = check_E_n(st.base, n)
    out = {
        "order": st.base.order,
        "index": st.index,
        "unit_of": list(st.unit_of),
        "pseudo_inverse": list(st.pseudo_inverse),
        "element_index": list(st.element_index),
        "E_n": {"n": n, "member": all(r.holds for r in reports),
                "identities": [{"identity": r.name, "holds": r.holds,
                                "counterexample": r.counterexample} for r in reports]},
    }
    if st.index >= 2:
        below = check_E_n(st.base, st.index - 1)
        out["E_index_minus_1"] = {"n": st.index - 1,
                                  "identities": [{"identity": r.name, "holds": r.holds,
                                                  "counterexample": r.counterexample}
                                                 for r in below]}
    return out
