"""Closed forms for the solved cases and the word families used around them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Set

from .words import Alphabet, AlphabetError, ends_with_power, letter_counts, reverse

# Morphism whose fixed point starting at 'a' is square-free (ternary Thue word).
SQUAREFREE_MORPHISM = {"a": "abc", "b": "ac", "c": "b"}

TRIVIAL_P1 = "trivial-p1"
TRIVIAL_K1 = "trivial-k1"
PARITY_22 = "parity-22"
MODP_FILTER = "modp-filter"


@dataclass(frozen=True)
class OracleVerdict:
    word: str
    verdict: Optional[bool]
    rule: Optional[str]

    def to_dict(self):
        return {"word": self.word, "verdict": self.verdict, "rule": self.rule}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def modp_filter(w: str, p: int) -> bool:
    """Necessary condition for p-deletability: every letter occurs a multiple of p times."""
    return all(c % p == 0 for c in letter_counts(w))


def d22_oracle(w: str, k: int = 2) -> bool:
    if k != 2:
        raise AlphabetError(f"the parity characterisation is for binary words, got k={k}")
    a, b = letter_counts(Alphabet(2).validate(w), 2)
    return a % 2 == 0 and b % 2 == 0


def trivial_oracle(w: str, k: int, p: int) -> Optional[bool]:
    """Membership in D_{k,p} (= SD_{k,p}) where a closed form is known, else None."""
    Alphabet(k).validate(w)
    if p == 1:
        return True
    if k == 1:
        return len(w) % p == 0
    if (k, p) == (2, 2):
        return d22_oracle(w)
    return None


def oracle_verdict(w: str, k: int, p: int) -> OracleVerdict:
    """Closed-form verdict, falling back to the mod-p filter for a negative answer."""
    verdict = trivial_oracle(w, k, p)
    if verdict is not None:
        rule = TRIVIAL_P1 if p == 1 else TRIVIAL_K1 if k == 1 else PARITY_22
        return OracleVerdict(w, verdict, rule)
    if not modp_filter(w, p):
        return OracleVerdict(w, False, MODP_FILTER)
    return OracleVerdict(w, None, None)


def squarefree_word(n: int) -> str:
    if n < 0:
        raise ValueError("length must be non-negative")
    w = "a"
    while len(w) < n:
        w = "".join(SQUAREFREE_MORPHISM[c] for c in w)
    return w[:n]


def fibonacci_word(n: int) -> str:
    """S_0 = a, S_1 = ab, S_n = S_{n-2} S_{n-1}."""
    if n < 0:
        raise ValueError("index must be non-negative")
    prev, cur = "a", "ab"
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, prev + cur
    return cur


def enumerate_powerfree(k: int, p: int, maxlen: int) -> Set[str]:
    """All p-th-power-free words over the k-letter alphabet of length at most ``maxlen``.

    Grown letter by letter: a power-free word stays power-free after appending
    a letter unless the new word ends with a power.
    """
    letters = Alphabet(k).letters
    found = {""}
    layer = [""]
    for _ in range(maxlen):
        layer = [u + c for u in layer for c in letters if not ends_with_power(u + c, p)]
        found.update(layer)
    return found


def palindromic_double(x: str) -> str:
    return x + reverse(x)


def separated_double(x: str, y: str) -> str:
    return x + y + reverse(x)
