"""Finite lattices, equivalence lattices and modular-element checks.

All modularity checks are brute force over the defining equations; they are
meant to be trusted as oracles, not to be fast.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np


class NotALattice(ValueError):
    pass


class SizeGuardError(ValueError):
    pass


MAX_EQ_SIZE = 6


class FiniteLattice:
    """A lattice on ``range(size)`` given by its order relation.

    ``leq[i, j]`` is True iff ``i <= j``.  Join and meet tables are derived
    and the lattice axioms are checked on construction.
    """

    def __init__(self, leq, labels=None):
        leq = np.array(leq, dtype=bool)
        m = leq.shape[0]
        if leq.shape != (m, m) or m == 0:
            raise NotALattice("order relation must be a non-empty square matrix")
        if not leq.diagonal().all():
            raise NotALattice("relation is not reflexive")
        if (leq & leq.T & ~np.eye(m, dtype=bool)).any():
            raise NotALattice("relation is not antisymmetric")
        if ((leq.astype(np.int64) @ leq.astype(np.int64) > 0) & ~leq).any():
            raise NotALattice("relation is not transitive")
        leq.setflags(write=False)
        self.leq = leq
        self.size = m
        self.labels = list(labels) if labels is not None else [str(i) for i in range(m)]
        if len(self.labels) != m:
            raise ValueError("need one label per element")
        self.join = _extremum_table(leq, "join")
        self.meet = _extremum_table(leq.T, "meet")

    @classmethod
    def from_pairs(cls, size, pairs, labels=None):
        """Reflexive-transitive closure of the given ``(i, j)`` meaning ``i <= j``."""
        leq = np.eye(size, dtype=bool)
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise NotALattice(f"pair ({i}, {j}) out of range")
            leq[i, j] = True
        for k in range(size):
            leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
        return cls(leq, labels)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteLattice(size={self.size})"

    @property
    def bottom(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @property
    def top(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    def dual(self) -> "FiniteLattice":
        return FiniteLattice(self.leq.T, self.labels)

    def covers(self) -> list:
        """Covering pairs ``(i, j)``: ``i < j`` with nothing strictly between."""
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(lt & ~between))]

    def index(self, label) -> int:
        return self.labels.index(label)


def _extremum_table(leq, what):
    # least upper bounds w.r.t. leq (pass leq.T for greatest lower bounds)
    m = leq.shape[0]
    nleq = (~leq).astype(np.float64)
    table = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        ub = leq[i][None, :] & leq  # row j: common upper bounds of i and j
        # u is least in ub[j] iff no v in ub[j] with not u <= v
        blocked = (ub.astype(np.float64) @ nleq.T) > 0
        least = ub & ~blocked
        counts = least.sum(axis=1)
        if (counts != 1).any():
            j = int(np.flatnonzero(counts != 1)[0])
            raise NotALattice(f"elements {i} and {j} have no {what}")
        table[i] = least.argmax(axis=1)
    table.setflags(write=False)
    return table


@dataclass
class ModularityReport:
    element: int
    is_lower_modular: bool
    is_upper_modular: bool
    lower_counterexample: tuple | None = None  # (y, z)
    upper_counterexample: tuple | None = None

    @property
    def counterexample(self):
        return self.lower_counterexample or self.upper_counterexample


def _lower_violation(L, x):
    # x <= y  ->  (z v x) ^ y == (z ^ y) v x, vectorised over z
    J, M = L.join, L.meet
    for y in np.flatnonzero(L.leq[x]):
        lhs = M[J[:, x], y]
        rhs = J[M[:, y], x]
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            return int(y), int(bad[0])
    return None


def _upper_violation(L, x):
    # y <= x  ->  (z ^ x) v y == (z v y) ^ x
    J, M = L.join, L.meet
    for y in np.flatnonzero(L.leq[:, x]):
        lhs = J[M[:, x], y]
        rhs = M[J[:, y], x]
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            return int(y), int(bad[0])
    return None


def modularity_report(L: FiniteLattice, x: int) -> ModularityReport:
    if not 0 <= x < L.size:
        raise IndexError(f"element {x} not in lattice of size {L.size}")
    lo = _lower_violation(L, x)
    up = _upper_violation(L, x)
    return ModularityReport(x, lo is None, up is None, lo, up)


# Both flags are always computed; the names mirror the question being asked.
is_lower_modular = modularity_report
is_upper_modular = modularity_report


def lower_modular_elements(L: FiniteLattice) -> list:
    return [x for x in range(L.size) if _lower_violation(L, x) is None]


def upper_modular_elements(L: FiniteLattice) -> list:
    return [x for x in range(L.size) if _upper_violation(L, x) is None]


# ---------------------------------------------------------------- partitions

@dataclass(frozen=True)
class Partition:
    """A partition of ``range(len(labels))``; ``labels[i]`` is the block of ``i``.

    Block ids are canonical: blocks are numbered by their least element.
    """

    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", _canonical(self.labels))

    @classmethod
    def from_blocks(cls, size, blocks):
        labels = [None] * size
        for b, block in enumerate(blocks):
            for i in block:
                if labels[i] is not None:
                    raise ValueError(f"element {i} in two blocks")
                labels[i] = b
        if None in labels:
            raise ValueError("blocks do not cover the carrier")
        return cls(tuple(labels))

    @property
    def size(self):
        return len(self.labels)

    @property
    def blocks(self) -> list:
        out: dict = {}
        for i, b in enumerate(self.labels):
            out.setdefault(b, []).append(i)
        return list(out.values())

    def refines(self, other: "Partition") -> bool:
        seen = {}
        for a, b in zip(self.labels, other.labels):
            if seen.setdefault(a, b) != b:
                return False
        return True

    def meet(self, other: "Partition") -> "Partition":
        pairs = list(zip(self.labels, other.labels))
        return Partition(tuple(pairs.index(p) for p in pairs))

    def join(self, other: "Partition") -> "Partition":
        parent = list(range(self.size))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for lab in (self.labels, other.labels):
            first = {}
            for i, b in enumerate(lab):
                j = first.setdefault(b, i)
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        return Partition(tuple(find(i) for i in range(self.size)))

    def __str__(self):
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def _canonical(labels):
    ids: dict = {}
    return tuple(ids.setdefault(b, len(ids)) for b in labels)


def nonsingleton_class_count(p: Partition) -> int:
    return sum(1 for b in p.blocks if len(b) >= 2)


def all_partitions(s: int) -> list:
    """Restricted growth strings of length ``s`` in lexicographic order."""
    out = []

    def grow(prefix, top):
        if len(prefix) == s:
            out.append(Partition(tuple(prefix)))
            return
        for b in range(top + 2):
            grow(prefix + [b], max(top, b))

    grow([], -1)
    return out


def equivalence_lattice(s: int):
    """``(Eq(s), partitions)``: element ``i`` of the lattice is ``partitions[i]``."""
    if not 1 <= s <= MAX_EQ_SIZE:
        raise SizeGuardError(f"equivalence lattices are limited to 1 <= s <= {MAX_EQ_SIZE}")
    parts = all_partitions(s)
    leq = [[p.refines(q) for q in parts] for p in parts]
    return FiniteLattice(leq, [str(p) for p in parts]), parts


def verify_vv_proposition(s: int):
    """Check: a partition is upper-modular in Eq(s) iff it has at most one non-singleton class.

    Returns ``(True, None)`` or ``(False, partition)`` for the first violation.
    """
    L, parts = equivalence_lattice(s)
    for i, p in enumerate(parts):
        upper = _upper_violation(L, i) is None
        if upper != (nonsingleton_class_count(p) <= 1):
            return False, p
    return True, None


# ------------------------------------------------------- separation lemmas

def chain_separation_check(L: FiniteLattice):
    """c1 lower-modular, c1 <= c2, e ^ c2 <= c1, e v c1 == e v c2  =>  c1 == c2.

    Returns ``(True, None)`` or ``(False, (c1, c2, e))``.
    """
    J, M, leq = L.join, L.meet, L.leq
    for c1 in lower_modular_elements(L):
        for c2 in np.flatnonzero(leq[c1]):
            if c2 == c1:
                continue
            hyp = leq[M[:, c2], c1] & (J[:, c1] == J[:, c2])
            if hyp.any():
                return False, (c1, int(c2), int(np.flatnonzero(hyp)[0]))
    return True, None


def antichain_separation_check(L: FiniteLattice):
    """a1 lower-modular, e ^ (a1 v a2) <= a1, a2 <= e v a1  =>  a2 <= a1.

    Returns ``(True, None)`` or ``(False, (a1, a2, e))``.
    """
    J, M, leq = L.join, L.meet, L.leq
    for a1 in lower_modular_elements(L):
        for a2 in range(L.size):
            if leq[a2, a1]:
                continue
            hyp = leq[M[:, J[a1, a2]], a1] & leq[a2, J[:, a1]]
            if hyp.any():
                return False, (a1, a2, int(np.flatnonzero(hyp)[0]))
    return True, None


def separation_mutation_witness(L: FiniteLattice):
    """First ``(c1, c2, e)`` meeting the chain-separation hypotheses with c1 != c2,
    where c1 is *not* lower-modular; None if there is none."""
    J, M, leq = L.join, L.meet, L.leq
    good = set(lower_modular_elements(L))
    for c1 in range(L.size):
        if c1 in good:
            continue
        for c2 in np.flatnonzero(leq[c1]):
            if c2 == c1:
                continue
            hyp = leq[M[:, c2], c1] & (J[:, c1] == J[:, c2])
            if hyp.any():
                return c1, int(c2), int(np.flatnonzero(hyp)[0])
    return None


# ------------------------------------------------------------ named lattices

def chain(m: int) -> FiniteLattice:
    return FiniteLattice(np.triu(np.ones((m, m), dtype=bool)))


def pentagon() -> FiniteLattice:
    """N5 with elements 0, a, b, c, 1 and 0 < a < c < 1, 0 < b < 1."""
    return FiniteLattice.from_pairs(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
                                    labels=["0", "a", "b", "c", "1"])


def diamond() -> FiniteLattice:
    """M3 with elements 0, a, b, c, 1."""
    return FiniteLattice.from_pairs(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
                                    labels=["0", "a", "b", "c", "1"])


def _canonical_key(leq):
    m = leq.shape[0]
    best = None
    for perm in itertools.permutations(range(m)):
        key = leq[np.ix_(perm, perm)].tobytes()
        if best is None or key < best:
            best = key
    return best


def all_lattices(max_size: int) -> list:
    """Every lattice with at most ``max_size`` elements, one per isomorphism class.

    Bottom and top are added around every naturally labelled poset on the
    remaining points, which reaches every isomorphism type.
    """
    found = [FiniteLattice([[True]])]
    for m in range(2, max_size + 1):
        k = m - 2
        inner = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
        seen = set()
        for mask in range(1 << len(inner)):
            leq = np.eye(m, dtype=bool)
            leq[0, :] = True
            leq[:, m - 1] = True
            for bit, (i, j) in enumerate(inner):
                if mask >> bit & 1:
                    leq[i, j] = True
            if ((leq.astype(np.int64) @ leq.astype(np.int64) > 0) & ~leq).any():
                continue
            try:
                L = FiniteLattice(leq)
            except NotALattice:
                continue
            key = _canonical_key(leq)
            if key not in seen:
                seen.add(key)
                found.append(L)
    return found


# ----------------------------------------------------------------- I/O

def hasse_dot(L: FiniteLattice, labels=None, name: str = "L") -> str:
    """Graphviz digraph of the covering relation, drawn bottom to top."""
    labels = list(labels) if labels is not None else L.labels
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=circle];"]
    for i in range(L.size):
        lines.append(f'  n{i} [label="{labels[i]}"];')
    for i, j in L.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_from_json(data: dict) -> FiniteLattice:
    try:
        size = int(data["size"])
        pairs = [(int(i), int(j)) for i, j in data.get("leq", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise NotALattice(f"malformed lattice JSON: {exc}") from exc
    return FiniteLattice.from_pairs(size, pairs, data.get("labels"))


def lattice_to_json(L: FiniteLattice) -> dict:
    return {"size": L.size, "leq": [list(c) for c in L.covers()], "labels": L.labels}
