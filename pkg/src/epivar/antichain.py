"""Finite samples of an infinite anti-chain of square-free words, indexed by rationals.

The family is built greedily: square-free words over ``k`` letters are
scanned in length-lex order and a candidate is admitted only when neither it
nor any admitted member is applicable to the other.  Every family handed out
has been re-verified from scratch.

Greedy admission fills whole length levels: once every letter-shape of
length ``L`` is in, each longer square-free word has a factor that is a
renamed member, so nothing longer is ever admitted.  A configuration
therefore yields a finite family (76 words for the defaults) and asking for
more raises :class:`GenerationExhausted`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import (
    Word,
    as_word,
    contains_square,
    enumerate_square_free,
    format_word,
    is_applicable,
    parse_word,
)

RationalIndex = Fraction


class GenerationExhausted(RuntimeError):
    """The greedy search hit its length ceiling before the family was complete."""


def rational_of_nat(n: int) -> Fraction:
    """Bijection N -> Q: 0, then the Calkin-Wilf sequence interleaved with its negatives.

    ``2k-1`` maps to the k-th positive rational in Calkin-Wilf order and
    ``2k`` to its negative.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Fraction(0)
    k = (n + 1) // 2
    a, b = 1, 1
    # walk the Calkin-Wilf tree: bit 0 -> a/(a+b), bit 1 -> (a+b)/b
    for bit in bin(k)[3:]:
        if bit == "0":
            b = a + b
        else:
            a = a + b
    q = Fraction(a, b)
    return q if n % 2 else -q


def nat_of_rational(q) -> int:
    """Inverse of :func:`rational_of_nat`."""
    q = Fraction(q)
    if q == 0:
        return 0
    a, b = abs(q.numerator), q.denominator
    bits = []
    while (a, b) != (1, 1):
        if a < b:
            b -= a
            bits.append("0")
        else:
            a -= b
            bits.append("1")
    k = int("1" + "".join(reversed(bits)), 2)
    return 2 * k - 1 if q > 0 else 2 * k


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class IndexedWord:
    index: Fraction
    word: Word

    @property
    def first_letter(self):
        return self.word[0]


@dataclass
class AntichainCertificate:
    members: list
    checked_pairs: int
    squarefree_checked: int

    ok = True


@dataclass
class AntichainCounterexample:
    """Why a list of words is not a square-free anti-chain.

    ``kind`` is ``"square"`` (``first`` contains ``witness = (pos, root)``) or
    ``"pair"`` (``first`` is applicable to ``second`` via ``witness``).
    """

    kind: str
    first: IndexedWord
    second: IndexedWord | None = None
    witness: object = None

    ok = False


def verify_antichain(words) -> AntichainCertificate | AntichainCounterexample:
    words = list(words)
    for w in words:
        sq = contains_square(w.word)
        if sq is not None:
            return AntichainCounterexample("square", w, witness=sq)
    pairs = 0
    for i, wi in enumerate(words):
        for j, wj in enumerate(words):
            if i == j:
                continue
            wit = is_applicable(wi.word, wj.word)
            if wit is not None:
                return AntichainCounterexample("pair", wi, wj, wit)
            pairs += 1
    return AntichainCertificate(words, pairs, len(words))


def _greedy_words(count, alphabet_size, min_length, max_length):
    chosen: list = []
    if count == 0:
        return chosen
    for cand in enumerate_square_free(alphabet_size, max_length, min_length):
        if any(is_applicable(w, cand) is not None or is_applicable(cand, w) is not None
               for w in chosen):
            continue
        chosen.append(cand)
        if len(chosen) == count:
            return chosen
    raise GenerationExhausted(
        f"only {len(chosen)} of {count} words found up to length {max_length}; raise max_length")


def generate_family(count: int, alphabet_size: int = 3, min_length: int = 14,
                    max_length: int = 16) -> list:
    """The first ``count`` members of the greedy family, indexed by ``rational_of_nat(0..count-1)``.

    Deterministic, and ``generate_family(K)`` is a prefix of
    ``generate_family(K + 1)``.  Raises :class:`GenerationExhausted` rather
    than return something unverified.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if alphabet_size < 3:
        raise ValueError("square-free words over fewer than 3 letters are finite in number")
    words = _greedy_words(count, alphabet_size, min_length, max_length)
    family = [IndexedWord(rational_of_nat(i), w) for i, w in enumerate(words)]
    cert = verify_antichain(family)
    if not cert.ok:
        raise AssertionError(f"greedy family failed verification: {cert}")
    return family


def family_for_indices(indices, **kwargs) -> list:
    """Smallest generated family containing a member for each rational in ``indices``."""
    indices = list(indices)
    need = max((nat_of_rational(q) for q in indices), default=-1) + 1
    return generate_family(need, **kwargs)


def family_to_json(family) -> list:
    return [{"index": format_rational(m.index), "word": format_word(m.word)} for m in family]


def family_from_json(data) -> list:
    return [IndexedWord(parse_rational(item["index"]), parse_word(item["word"])) for item in data]


def certificate_to_json(cert: AntichainCertificate) -> dict:
    return {
        "member_count": len(cert.members),
        "checked_pairs": cert.checked_pairs,
        "squarefree_checked": cert.squarefree_checked,
        "members": [
            {"index": format_rational(m.index), "word": format_word(m.word), "square_free": True}
            for m in cert.members
        ],
    }


def counterexample_to_json(cx: AntichainCounterexample) -> dict:
    out = {"kind": cx.kind,
           "first": {"index": format_rational(cx.first.index), "word": format_word(cx.first.word)}}
    if cx.kind == "square":
        pos, root = cx.witness
        out["square"] = {"position": pos, "root": format_word(root)}
    else:
        out["second"] = {"index": format_rational(cx.second.index),
                         "word": format_word(cx.second.word)}
        out["substitution"] = {format_word((c,)): format_word(img)
                               for c, img in sorted(cx.witness.substitution.items())}
        out["factor"] = [cx.witness.start, cx.witness.end]
    return out


def indexed(index, word) -> IndexedWord:
    return IndexedWord(Fraction(index), as_word(word))
