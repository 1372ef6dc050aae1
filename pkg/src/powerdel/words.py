"""Alphabets, words and p-th power factors.

Words are plain Python strings over the first ``k`` lowercase Latin letters.
The empty string is the empty word.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from typing import Iterator, List, Optional

UNIVERSE = string.ascii_lowercase

# Token used for the empty word on command lines and in word-list files.
EMPTY_TOKEN = "-"


class AlphabetError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if not 1 <= self.size <= len(UNIVERSE):
            raise AlphabetError(f"alphabet size must be in 1..{len(UNIVERSE)}, got {self.size}")

    @property
    def letters(self) -> str:
        return UNIVERSE[: self.size]

    def index(self, letter: str) -> int:
        i = UNIVERSE.find(letter)
        if i < 0 or i >= self.size or len(letter) != 1:
            raise AlphabetError(f"{letter!r} is not a letter of the {self.size}-letter alphabet")
        return i

    def contains(self, w: str) -> bool:
        return all(c in self.letters for c in w)

    def validate(self, w: str) -> str:
        for c in w:
            self.index(c)
        return w

    def words(self, maxlen: int, minlen: int = 0) -> Iterator[str]:
        """All words of length ``minlen..maxlen`` in shortlex order."""
        for n in range(minlen, maxlen + 1):
            for t in itertools.product(self.letters, repeat=n):
                yield "".join(t)


def alphabet_size(w: str) -> int:
    """Smallest k such that ``w`` is a word over the k-letter alphabet (at least 1)."""
    return max((UNIVERSE.index(c) + 1 for c in w), default=1)


def parse_word(token: str, k: Optional[int] = None) -> str:
    """Read a word from a command-line token; ``-`` stands for the empty word."""
    w = "" if token == EMPTY_TOKEN else token
    if k is not None:
        Alphabet(k).validate(w)
    elif any(c not in UNIVERSE for c in w):
        raise AlphabetError(f"{token!r} is not a word over a-z")
    return w


def format_word(w: str) -> str:
    return w if w else EMPTY_TOKEN


def shortlex(words) -> List[str]:
    return sorted(words, key=lambda w: (len(w), w))


def letter_counts(w: str, k: Optional[int] = None) -> List[int]:
    if k is None:
        k = alphabet_size(w)
    alphabet = Alphabet(k)
    counts = [0] * k
    for c in w:
        counts[alphabet.index(c)] += 1
    return counts


def reverse(w: str) -> str:
    return w[::-1]


@dataclass(frozen=True, order=True)
class PowerOccurrence:
    """The factor ``u^exponent`` with ``|u| = period`` starting at ``start``."""

    start: int
    period: int
    exponent: int

    @property
    def length(self) -> int:
        return self.period * self.exponent

    @property
    def end(self) -> int:
        return self.start + self.length

    def occurs_in(self, w: str) -> bool:
        if self.start < 0 or self.period < 1 or self.exponent < 1 or self.end > len(w):
            return False
        block = w[self.start : self.start + self.period]
        return w[self.start : self.end] == block * self.exponent

    def as_tuple(self):
        return (self.start, self.period, self.exponent)


def _check_exponent(p: int) -> None:
    if p < 1:
        raise ValueError(f"exponent must be positive, got {p}")


def is_power(w: str, p: int) -> bool:
    _check_exponent(p)
    n = len(w)
    if n == 0 or n % p:
        return False
    return w == w[: n // p] * p


def find_power_occurrences(w: str, p: int) -> List[PowerOccurrence]:
    """Every located p-th power factor of ``w``, sorted by (start, period)."""
    _check_exponent(p)
    n = len(w)
    found = []
    for start in range(n):
        for period in range(1, (n - start) // p + 1):
            block = w[start : start + period]
            if w[start : start + period * p] == block * p:
                found.append(PowerOccurrence(start, period, p))
    return found


def is_power_free(w: str, p: int) -> bool:
    _check_exponent(p)
    n = len(w)
    for start in range(n):
        for period in range(1, (n - start) // p + 1):
            if w[start : start + period * p] == w[start : start + period] * p:
                return False
    return True


def ends_with_power(w: str, p: int) -> bool:
    """True iff some suffix of ``w`` is a p-th power."""
    n = len(w)
    for period in range(1, n // p + 1):
        if w[n - period * p :] == w[n - period :] * p:
            return True
    return False
