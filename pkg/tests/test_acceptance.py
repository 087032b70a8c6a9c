"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed in the terminal summary.
"""

import itertools
import time
from fractions import Fraction

import pytest

from epivar.antichain import family_for_indices, generate_family, verify_antichain
from epivar.epigroups import analyze, check_E_n, enumerate_semigroups, in_E_n, structure_violations
from epivar.lattice import (
    Partition,
    all_lattices,
    antichain_separation_check,
    chain_separation_check,
    diamond,
    equivalence_lattice,
    is_upper_modular,
    pentagon,
    separation_mutation_witness,
    verify_vv_proposition,
)
from epivar.varieties import (
    A_BELOW,
    B_BELOW,
    INCOMPARABLE,
    VarietySpec,
    build_variety,
    compare,
    parse_pool,
)
from epivar.words import contains_square, enumerate_square_free, is_applicable, parse_word
from oracles import all_words, applicable_oracle, canonical_pattern, square_oracle

XX = parse_word("xx")
POOL = parse_pool("-2..2/4")  # {k/4 : -8 <= k <= 8}


@pytest.fixture(scope="module")
def family():
    fam = family_for_indices(POOL)
    assert verify_antichain(fam).ok
    return fam


def _alpha_of(witness, family, n):
    for m in family:
        if witness == (m.first_letter,) * (n - 1) + m.word:
            return m.index
    return None


@pytest.mark.criterion(1, "applicability agrees with brute-force oracle (patterns <=3 letters, len<=4; ternary targets len<=7)")
def test_oracle_equivalence():
    start = time.perf_counter()
    patterns = [tuple(23 + c for c in p) for p in all_words(3, 4)]
    targets = list(all_words(3, 7))
    assert (len(patterns), len(targets)) == (120, 3279)
    disagreements = []
    for v in targets:
        # applicability is invariant under renaming pattern letters
        oracle = {}
        for u in patterns:
            key = canonical_pattern(u)
            if key not in oracle:
                oracle[key] = applicable_oracle(key, v) is not None
            wit = is_applicable(u, v)
            if (wit is not None) != oracle[key]:
                disagreements.append((u, v))
            elif wit is not None:
                assert wit.check(u, v)
    elapsed = time.perf_counter() - start
    assert disagreements == []
    assert elapsed < 300


@pytest.mark.criterion(2, "contains_square(w) <=> xx applicable to w, all ternary words len<=12")
def test_square_criterion():
    bad = 0
    count = 0
    for w in all_words(3, 12):
        count += 1
        if (contains_square(w) is None) != (is_applicable(XX, w) is None):
            bad += 1
    assert count == sum(3 ** L for L in range(1, 13))
    assert bad == 0


@pytest.mark.criterion(3, "binary square-free words up to length 10 are exactly a, b, ab, ba, aba, bab")
def test_binary_census():
    got = list(enumerate_square_free(2, 10))
    assert got == [parse_word(t) for t in ["a", "b", "ab", "ba", "aba", "bab"]]
    assert got == [w for w in all_words(2, 10) if not square_oracle(w)]


@pytest.mark.criterion(4, "generate_family(12, 3): 132 ordered pairs non-applicable, 12 square-free")
def test_antichain_certificate():
    start = time.perf_counter()
    fam = generate_family(12, 3)
    cert = verify_antichain(fam)
    assert cert.ok
    assert (len(cert.members), cert.checked_pairs, cert.squarefree_checked) == (12, 132, 12)
    assert time.perf_counter() - start < 600


@pytest.mark.criterion(5, "C^n chain: xi1 < xi2 gives strict containment with witness x_a^(n-1) Z_a, a in [xi1, xi2), n=1,2,3")
def test_chain_of_c_varieties(family):
    checked = 0
    for n in (1, 2, 3):
        C = {xi: build_variety(VarietySpec("C", n, xi, POOL), family) for xi in POOL}
        for x1, x2 in itertools.combinations(POOL, 2):
            res = compare(C[x1], C[x2])
            assert res.relation == A_BELOW, (n, x1, x2)
            alpha = _alpha_of(res.witnesses["holds_in_a_not_b"], family, n)
            assert alpha is not None and x1 <= alpha < x2
            checked += 1
    assert checked == 3 * 136


@pytest.mark.criterion(6, "A^n anti-chain: distinct xi with pool points on both sides of the interval difference are incomparable, n=1,2,3")
def test_antichain_of_a_varieties(family):
    incomparable = one_sided = 0
    for n in (1, 2, 3):
        A = {xi: build_variety(VarietySpec("A", n, xi, POOL), family) for xi in POOL}
        for x1, x2 in itertools.permutations(POOL, 2):
            s1, s2 = set(A[x1].extra_generators), set(A[x2].extra_generators)
            i1 = {a for a in POOL if x1 - 1 < a < x1 + 1}
            i2 = {a for a in POOL if x2 - 1 < a < x2 + 1}
            res = compare(A[x1], A[x2])
            if i1 - i2 and i2 - i1:
                assert res.relation == INCOMPARABLE, (n, x1, x2)
                wa = _alpha_of(res.witnesses["holds_in_a_not_b"], family, n)
                wb = _alpha_of(res.witnesses["holds_in_b_not_a"], family, n)
                assert wa in i1 - i2 and wb in i2 - i1
                incomparable += 1
            elif i1 - i2 or i2 - i1:
                # truncated pool: one index set contains the other
                assert res.relation == (A_BELOW if s1 > s2 else B_BELOW), (n, x1, x2)
                one_sided += 1
    assert incomparable > 0
    assert incomparable + one_sided == 3 * 17 * 16


@pytest.mark.criterion(7, "upper-modular in Eq(s) <=> at most one non-singleton class, s=1..5")
def test_vv_proposition():
    for s in range(1, 6):
        assert verify_vv_proposition(s) == (True, None)
    L, parts = equivalence_lattice(4)
    good = parts.index(Partition.from_blocks(4, [[0, 1], [2], [3]]))
    bad = parts.index(Partition.from_blocks(4, [[0, 1], [2, 3]]))
    assert is_upper_modular(L, good).is_upper_modular
    assert not is_upper_modular(L, bad).is_upper_modular
    assert equivalence_lattice(5)[0].size == 52


@pytest.mark.criterion(8, "separation lemmas hold on all lattices <=6 elements, Eq(3), Eq(4), N5, M3; N5 mutation witness (a, c, b)")
def test_separation_lemmas():
    corpus = all_lattices(6) + [equivalence_lattice(3)[0], equivalence_lattice(4)[0],
                                pentagon(), diamond()]
    for L in corpus:
        assert chain_separation_check(L) == (True, None)
        assert antichain_separation_check(L) == (True, None)
    N = pentagon()
    assert tuple(N.labels[i] for i in separation_mutation_witness(N)) == ("a", "c", "b")


@pytest.mark.criterion(9, "epigroup invariants on every associative table of order <=3")
def test_epigroup_suite():
    start = time.perf_counter()
    total = 0
    for m in (1, 2, 3):
        for S in enumerate_semigroups(m):
            total += 1
            st = analyze(S)
            assert structure_violations(st) == []
            assert in_E_n(S, st.index)
            if st.index >= 2:
                assert not check_E_n(S, st.index - 1)[3].holds
    assert total == 1 + 8 + 113
    assert time.perf_counter() - start < 60
