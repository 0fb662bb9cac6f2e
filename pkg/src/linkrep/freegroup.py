"""Reduced words in the free group on a, b, c.

Words are strings over ``abcABC`` with uppercase meaning inverse; spaces and
``^-1`` suffixes are accepted on input (``"a b^-1 c"`` == ``"aBc"``).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import InvalidInput

LETTERS = "abcABC"
_INV = str.maketrans("abcABC", "ABCabc")
_TOKEN = re.compile(r"([abcABC])(\^-1|\^1)?")


def parse_word(text: str) -> str:
    text = text.strip()
    if text in ("", "1", "e"):
        return ""
    out = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if text[pos : m.start()].strip():
            raise InvalidInput(f"bad word {text!r}")
        letter = m.group(1)
        out.append(letter.translate(_INV) if m.group(2) == "^-1" else letter)
        pos = m.end()
    if text[pos:].strip():
        raise InvalidInput(f"bad word {text!r}")
    return reduce("".join(out))


def reduce(w: str) -> str:
    stack: list[str] = []
    for x in w:
        if stack and stack[-1] == x.translate(_INV):
            stack.pop()
        else:
            stack.append(x)
    return "".join(stack)


def invert(w: str) -> str:
    return w[::-1].translate(_INV)


def multiply(*words: str) -> str:
    return reduce("".join(words))


def word_len(w: str) -> int:
    return len(reduce(w))


def power(w: str, k: int) -> str:
    return reduce((w if k >= 0 else invert(w)) * abs(k))


def cyclic_reduce(w: str) -> str:
    w = reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == w[j - 1].translate(_INV):
        i += 1
        j -= 1
    return w[i:j]


def conjugate_in_free(u: str, v: str) -> bool:
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    return len(cu) == len(cv) and cv in cu + cu


def commutes(x: str, w: str) -> bool:
    return multiply(x, w) == multiply(w, x)


def centralizer_check(x: str, w: str) -> bool:
    """Does w commute with x."""
    return commutes(x, w)


def in_subgroup_ab(w: str) -> bool:
    w = reduce(w)
    return "c" not in w and "C" not in w


def reduced_words(max_len: int) -> Iterator[str]:
    """All reduced words of length <= max_len, shortest first."""
    yield ""
    layer = [""]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in LETTERS:
                if w and w[-1] == x.translate(_INV):
                    continue
                nxt.append(w + x)
        yield from nxt
        layer = nxt


def is_power_of(w: str, x: str, bound: int) -> bool:
    return any(reduce(w) == power(x, k) for k in range(-bound, bound + 1))


@dataclass
class CentralizerReport:
    element: str
    max_len: int
    checked: int = 0
    commuting: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "element": self.element,
            "max_len": self.max_len,
            "checked": self.checked,
            "commuting": self.commuting,
            "counterexamples": self.counterexamples,
        }


def centralizer_exhaustion(x: str, max_len: int) -> CentralizerReport:
    """Every reduced w with len <= max_len commuting with x must be a power of x."""
    x = reduce(x)
    rep = CentralizerReport(x, max_len)
    for w in reduced_words(max_len):
        rep.checked += 1
        if commutes(x, w):
            rep.commuting += 1
            if not is_power_of(w, x, max_len):
                rep.counterexamples.append(w)
    return rep


def _signed(letter: str, eps: int) -> str:
    return letter if eps > 0 else letter.translate(_INV)


def hypothesis_holds(w: str, eps: tuple[int, int, int, int]) -> bool:
    """Is a^e1 w b^e2 w^-1 conjugate to a^e3 b^e4."""
    e1, e2, e3, e4 = eps
    lhs = multiply(_signed("a", e1), w, _signed("b", e2), invert(w))
    return conjugate_in_free(lhs, _signed("a", e3) + _signed("b", e4))


SIGNS = tuple(itertools.product((1, -1), repeat=4))


@dataclass
class ConjugateProductReport:
    max_len: int
    words: int = 0
    pairs_checked: int = 0
    hypothesis_true: int = 0
    counterexamples: list[tuple[str, tuple[int, int, int, int]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "max_len": self.max_len,
            "words": self.words,
            "pairs_checked": self.pairs_checked,
            "hypothesis_true": self.hypothesis_true,
            "counterexamples": [[w, list(e)] for w, e in self.counterexamples],
        }


def conjugate_product_check(max_len: int) -> ConjugateProductReport:
    """If a^e1 w b^e2 w^-1 ~ a^e3 b^e4 then w avoids c; checked for len(w) <= max_len."""
    rep = ConjugateProductReport(max_len)
    for w in reduced_words(max_len):
        rep.words += 1
        for eps in SIGNS:
            rep.pairs_checked += 1
            if hypothesis_holds(w, eps):
                rep.hypothesis_true += 1
                if not in_subgroup_ab(w):
                    rep.counterexamples.append((w, eps))
    return rep


# name used by the public interface
lemma63_check = conjugate_product_check
