"""0-reduced nil-varieties given by finitely many identities ``w = 0``.

A system always contains the power word ``x^m`` (``m`` = ``nil_exponent``)
plus finitely many extra zero-words.  An identity ``u = 0`` follows from the
system exactly when some generator is applicable to ``u``; the words to which
no generator applies are the non-zero elements of the relatively free object.

Inclusion is in *variety* order: more identities means a smaller variety, so
``includes(sub, sup)`` asks whether ``sub`` satisfies every identity of ``sup``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .antichain import format_rational, parse_rational
from .words import as_word, format_word, is_applicable, parse_word, power

POWER_LETTER = 23  # "x"

EQUAL = "equal"
A_BELOW = "a-strictly-below"
B_BELOW = "b-strictly-below"
INCOMPARABLE = "incomparable"


class MissingFamilyMember(KeyError):
    pass


def _length_lex(w):
    return len(w), w


@dataclass(frozen=True)
class ZeroReducedSystem:
    nil_exponent: int
    extra_generators: frozenset = frozenset()
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.nil_exponent < 2:
            raise ValueError("nil_exponent must be at least 2")
        object.__setattr__(self, "extra_generators",
                           frozenset(as_word(w) for w in self.extra_generators))

    @property
    def power_word(self):
        return power(POWER_LETTER, self.nil_exponent)

    @property
    def generators(self) -> list:
        """Power word first, then the extra generators in length-lex order."""
        return [self.power_word] + sorted(self.extra_generators, key=_length_lex)

    def __str__(self):
        gens = ", ".join(format_word(g) for g in self.generators)
        name = f"{self.label} = " if self.label else ""
        return f"{name}var{{{gens} = 0}}"


def zero_witness(sys: ZeroReducedSystem, u):
    """``(generator, ApplicabilityWitness)`` for the first generator applicable to ``u``, else None."""
    u = as_word(u)
    for g in sys.generators:
        wit = is_applicable(g, u)
        if wit is not None:
            return g, wit
    return None


def is_zero_consequence(sys: ZeroReducedSystem, u) -> bool:
    return zero_witness(sys, u) is not None


@dataclass(frozen=True)
class VarietySpec:
    kind: str  # "C": alpha >= xi;  "A": xi - 1 < alpha < xi + 1
    n: int
    xi: Fraction
    pool: tuple

    def __post_init__(self):
        if self.kind not in ("C", "A"):
            raise ValueError(f"kind must be 'C' or 'A', not {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "xi", Fraction(self.xi))
        object.__setattr__(self, "pool", tuple(sorted({Fraction(a) for a in self.pool})))

    def in_range(self, alpha) -> bool:
        if self.kind == "C":
            return alpha >= self.xi
        return self.xi - 1 < alpha < self.xi + 1

    @property
    def indices(self) -> list:
        return [a for a in self.pool if self.in_range(a)]

    @property
    def label(self) -> str:
        return f"{self.kind}^{self.n}_{format_rational(self.xi)}"


def build_variety(spec: VarietySpec, family) -> ZeroReducedSystem:
    """The system ``{x^(n+1) = 0} + {x_a^(n-1) Z_a = 0 : a in pool, a in range}``.

    ``x_a`` is the first letter of ``Z_a``; for ``n = 1`` the prefix is empty.
    """
    words = {m.index: m.word for m in family} if not isinstance(family, dict) else family
    gens = []
    for alpha in spec.indices:
        try:
            z = words[alpha]
        except KeyError:
            raise MissingFamilyMember(f"family has no member indexed {format_rational(alpha)}") from None
        gens.append((z[0],) * (spec.n - 1) + tuple(z))
    return ZeroReducedSystem(spec.n + 1, frozenset(gens), label=spec.label)


@dataclass
class InclusionReport:
    included: bool
    witness: tuple | None
    trace: list  # (generator of sup, applying generator of sub or None)

    @property
    def verdict(self) -> str:
        return "included" if self.included else "not-included"


def includes(sub: ZeroReducedSystem, sup: ZeroReducedSystem) -> InclusionReport:
    """Is the variety of ``sub`` contained in the variety of ``sup``?

    True iff every generator of ``sup`` is a zero-consequence of ``sub``.
    The witness on failure is the first generator of ``sup`` that ``sub`` does
    not imply.
    """
    trace = []
    witness = None
    for g in sup.generators:
        hit = zero_witness(sub, g)
        trace.append((g, hit[0] if hit else None))
        if hit is None and witness is None:
            witness = g
    return InclusionReport(witness is None, witness, trace)


@dataclass
class Comparison:
    relation: str
    a_in_b: InclusionReport
    b_in_a: InclusionReport

    @property
    def witnesses(self) -> dict:
        """Identity words separating the two varieties.

        ``"holds_in_a_not_b"``: a generator of ``a`` that ``b`` does not imply,
        and symmetrically.
        """
        out = {}
        if self.b_in_a.witness is not None:
            out["holds_in_a_not_b"] = self.b_in_a.witness
        if self.a_in_b.witness is not None:
            out["holds_in_b_not_a"] = self.a_in_b.witness
        return out


def compare(a: ZeroReducedSystem, b: ZeroReducedSystem) -> Comparison:
    ab = includes(a, b)
    ba = includes(b, a)
    if ab.included and ba.included:
        rel = EQUAL
    elif ab.included:
        rel = A_BELOW
    elif ba.included:
        rel = B_BELOW
    else:
        rel = INCOMPARABLE
    return Comparison(rel, ab, ba)


def meet(a: ZeroReducedSystem, b: ZeroReducedSystem) -> ZeroReducedSystem:
    return ZeroReducedSystem(min(a.nil_exponent, b.nil_exponent),
                             a.extra_generators | b.extra_generators)


def join_satisfies(a: ZeroReducedSystem, b: ZeroReducedSystem, u) -> bool:
    """Does ``u = 0`` hold in the join of the two varieties?"""
    return is_zero_consequence(a, u) and is_zero_consequence(b, u)


def all_words(alphabet_size: int, max_length: int):
    for L in range(1, max_length + 1):
        yield from itertools.product(range(alphabet_size), repeat=L)


def free_object_enumerate(sys: ZeroReducedSystem, alphabet_size: int, max_length: int) -> list:
    """Non-zero elements of the relatively free object, up to ``max_length``, length-lex."""
    if alphabet_size < 1 or max_length < 1:
        raise ValueError("alphabet_size and max_length must be positive")
    return [w for w in all_words(alphabet_size, max_length) if not is_zero_consequence(sys, w)]


def parse_pool(text: str) -> tuple:
    """``"a..b/d"`` -> the rationals ``k/d`` lying in ``[a, b]``.

    The last ``/d`` is always the step denominator, so rational bounds need an
    explicit one: ``"-1/2..1/2/4"``.
    """
    try:
        lo, hi = text.split("..")
        d = "1"
        if "/" in hi:
            hi, d = hi.rsplit("/", 1)
        lo, hi, d = parse_rational(lo), parse_rational(hi), int(d)
    except ValueError as exc:
        raise ValueError(f"bad pool {text!r}; expected a..b/d") from exc
    if d < 1:
        raise ValueError("pool denominator must be positive")
    return tuple(Fraction(k, d) for k in range(math.ceil(lo * d), math.floor(hi * d) + 1))


def parse_spec(text: str, pool) -> VarietySpec:
    """``"C:1:0"`` or ``"A:2:1/2"`` -> VarietySpec over ``pool``."""
    try:
        kind, n, xi = text.split(":")
        return VarietySpec(kind.upper(), int(n), parse_rational(xi), tuple(pool))
    except ValueError as exc:
        raise ValueError(f"bad variety {text!r}; expected KIND:n:xi") from exc


def spec_to_json(spec: VarietySpec) -> dict:
    return {"kind": spec.kind, "n": spec.n, "xi": format_rational(spec.xi),
            "pool": [format_rational(a) for a in spec.pool]}


def spec_from_json(data: dict) -> VarietySpec:
    return VarietySpec(data["kind"], int(data["n"]), parse_rational(str(data["xi"])),
                       tuple(parse_rational(str(a)) for a in data["pool"]))


def system_to_json(sys: ZeroReducedSystem) -> dict:
    return {"label": sys.label, "nil_exponent": sys.nil_exponent,
            "generators": [format_word(g) for g in sys.generators]}


def system_from_words(words, label=None) -> ZeroReducedSystem:
    """Build a system from text words; single-letter powers set the nil exponent."""
    nil = None
    extras = set()
    for text in words:
        w = parse_word(text) if isinstance(text, str) else as_word(text)
        if len(set(w)) == 1 and len(w) >= 2:
            nil = len(w) if nil is None else min(nil, len(w))
        else:
            extras.add(w)
    if nil is None:
        raise ValueError("a 0-reduced nil system needs a power word x^m with m >= 2")
    return ZeroReducedSystem(nil, frozenset(extras), label=label)


def report_to_json(rep: InclusionReport) -> dict:
    return {
        "verdict": rep.verdict,
        "witness": format_word(rep.witness) if rep.witness is not None else None,
        "trace": [{"generator": format_word(g), "implied_by": format_word(h) if h else None}
                  for g, h in rep.trace],
    }


def comparison_to_json(cmp: Comparison) -> dict:
    return {
        "verdict": cmp.relation,
        "witnesses": {k: format_word(w) for k, w in cmp.witnesses.items()},
        "a_in_b": report_to_json(cmp.a_in_b),
        "b_in_a": report_to_json(cmp.b_in_a),
    }
