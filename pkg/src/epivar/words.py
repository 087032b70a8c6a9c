"""Words over a countable alphabet, substitutions and the applicability relation.

Letters are non-negative integers.  The names ``a``..``z`` are a display
convenience only: ``a`` is letter 0, ``z`` is letter 25.  A word is a
non-empty tuple of letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

Letter = int
Word = tuple  # tuple[Letter, ...], never empty

_NAMES = "abcdefghijklmnopqrstuvwxyz"


class WordError(ValueError):
    pass


class MissingLetterError(KeyError):
    """A substitution has no image for a letter of the word it is applied to."""


class SearchBudgetExceeded(RuntimeError):
    """The applicability search ran out of nodes before reaching a decision.

    This is never a "no" answer.
    """

    def __init__(self, budget):
        super().__init__(f"applicability search exceeded budget of {budget} nodes")
        self.budget = budget


def as_word(letters) -> Word:
    """Validate and freeze a sequence of letters (or parse a string)."""
    if isinstance(letters, str):
        return parse_word(letters)
    w = tuple(letters)
    if not w:
        raise WordError("words are non-empty")
    for c in w:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise WordError(f"invalid letter {c!r}")
    return w


def parse_word(text: str) -> Word:
    """Parse ``"abcab"`` (named letters) or ``"0,1,2"`` (raw letter ids)."""
    text = text.strip()
    if not text:
        raise WordError("empty word")
    if "," in text or text.isdigit():
        try:
            return as_word(int(part) for part in text.split(","))
        except ValueError as exc:
            raise WordError(f"cannot parse word {text!r}") from exc
    if not all(ch in _NAMES for ch in text):
        raise WordError(f"cannot parse word {text!r}")
    return tuple(_NAMES.index(ch) for ch in text)


def format_word(w) -> str:
    if all(c < len(_NAMES) for c in w):
        return "".join(_NAMES[c] for c in w)
    return ",".join(map(str, w))


def letters(w) -> list:
    """Distinct letters of ``w`` in order of first occurrence."""
    return list(dict.fromkeys(w))


def power(letter: Letter, k: int) -> Word:
    if k < 1:
        raise WordError("power exponent must be positive")
    return (letter,) * k


def apply_substitution(s: Mapping, u) -> Word:
    out = []
    for c in u:
        try:
            out.extend(s[c])
        except KeyError:
            raise MissingLetterError(c) from None
    return tuple(out)


def is_factor(u, v) -> bool:
    n, m = len(u), len(v)
    u, v = tuple(u), tuple(v)
    return any(v[i:i + n] == u for i in range(m - n + 1))


@dataclass(frozen=True)
class ApplicabilityWitness:
    """``substitution(pattern) == target[start:end]``."""

    substitution: Mapping
    start: int
    end: int

    def check(self, pattern, target) -> bool:
        return apply_substitution(self.substitution, pattern) == tuple(target[self.start:self.end])


def is_applicable(u, v, budget: int | None = None) -> ApplicabilityWitness | None:
    """Decide whether ``v = a s(u) b`` for a substitution ``s`` with non-empty images.

    Exhaustive backtracking: pattern positions left to right, shortest image
    first.  An image can never be longer than ``|v| - |u| + 1``, which makes
    the search finite and the answer exact.  With ``budget`` set, raises
    :class:`SearchBudgetExceeded` after that many search nodes.
    """
    u, v = tuple(u), tuple(v)
    n, m = len(u), len(v)
    if n == 0 or n > m:
        return None

    # later[i]: occurrences of u[i] after position i (only used at first occurrences)
    later = [u[i + 1:].count(u[i]) for i in range(n)]
    img: dict = {}
    nodes = 0

    def search(i, p, need):
        # need: minimal length still to be matched for positions i..n-1
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded(budget)
        if i == n:
            return p
        c = u[i]
        bound = img.get(c)
        if bound is not None:
            L = len(bound)
            if v[p:p + L] != bound:
                return None
            return search(i + 1, p + L, need - L)
        k = later[i]
        for L in range(1, m - p + 1):
            rest = need - 1 - k + k * L
            if p + L + rest > m:
                break
            img[c] = v[p:p + L]
            end = search(i + 1, p + L, rest)
            if end is not None:
                return end
        img.pop(c, None)
        return None

    for start in range(m - n + 1):
        img.clear()
        end = search(0, start, n)
        if end is not None:
            return ApplicabilityWitness(dict(img), start, end)
    return None


def contains_square(w) -> tuple | None:
    """First factor ``tt`` of ``w`` as ``(position, t)``, scanning positions left to right."""
    w = tuple(w)
    m = len(w)
    for i in range(m - 1):
        for h in range(1, (m - i) // 2 + 1):
            if w[i:i + h] == w[i + h:i + 2 * h]:
                return i, w[i:i + h]
    return None


def _has_square_suffix(w) -> bool:
    m = len(w)
    for h in range(1, m // 2 + 1):
        if w[m - 2 * h:m - h] == w[m - h:]:
            return True
    return False


def enumerate_square_free(alphabet_size: int, max_length: int, min_length: int = 1) -> Iterator[Word]:
    """Square-free words over letters ``0..k-1`` in length-then-lexicographic order."""
    if alphabet_size < 1 or max_length < 1:
        raise ValueError("alphabet_size and max_length must be positive")
    level = [(c,) for c in range(alphabet_size)]
    length = 1
    while level and length <= max_length:
        if length >= min_length:
            yield from level
        level = [w + (c,) for w in level for c in range(alphabet_size)
                 if not _has_square_suffix(w + (c,))]
        length += 1
