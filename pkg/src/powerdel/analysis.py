"""Finite insertion operators, exhaustive verification sweeps and
Myhill-Nerode witnesses for the square-deletion languages."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Set

from . import grammar as gr
from .deletion import DEFAULT_LIMIT, is_deletable, is_strongly_deletable, residues
from .known import (
    d22_oracle,
    enumerate_powerfree,
    fibonacci_word,
    modp_filter,
    palindromic_double,
    separated_double,
    squarefree_word,
)
from .words import Alphabet, is_power_free, reverse, shortlex


class UnknownTheorem(KeyError):
    pass


class BudgetExceeded(RuntimeError):
    pass


# -- insertion on finite languages -------------------------------------------


def insert_once(l1: Iterable[str], l2: Iterable[str], cap: int) -> Set[str]:
    """{xyz : xz in l1, y in l2, |xyz| <= cap}."""
    l2 = list(l2)
    out = set()
    for w in l1:
        for y in l2:
            if len(w) + len(y) > cap:
                continue
            for i in range(len(w) + 1):
                out.add(w[:i] + y + w[i:])
    return out


def insert_star_bounded(l1: Iterable[str], l2: Iterable[str], cap: int) -> Set[str]:
    """Union of all iterated insertions of ``l2`` into ``l1``, cut at length ``cap``."""
    reached = {w for w in l1 if len(w) <= cap}
    l2 = [y for y in set(l2) if y]  # inserting ε changes nothing
    frontier = reached
    while frontier:
        frontier = insert_once(frontier, l2, cap) - reached
        reached |= frontier
    return reached


def powers_up_to(k: int, p: int, cap: int) -> Set[str]:
    """{u^p : |u| >= 1, p|u| <= cap} over the k-letter alphabet."""
    return {u * p for u in Alphabet(k).words(cap // p, minlen=1)}


# -- verification sweeps ------------------------------------------------------


@dataclass
class VerificationReport:
    theorem: str
    params: Dict[str, object]
    checked_count: int = 0
    counterexamples: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "params": self.params,
            "checked_count": self.checked_count,
            "counterexamples": self.counterexamples,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def _sweep(report: VerificationReport, words: Iterable[str], holds: Callable[[str], bool]):
    for w in words:
        report.checked_count += 1
        if not holds(w):
            report.counterexamples.append(w)


def _binsq(report, maxlen=12):
    def holds(w):
        expected = d22_oracle(w)
        return is_deletable(w, 2) == expected and is_strongly_deletable(w, 2) == expected

    _sweep(report, Alphabet(2).words(maxlen, minlen=1), holds)


def _sixteen(report):
    _sweep(report, Alphabet(2).words(4, minlen=4), lambda w: not is_power_free(w, 2))


def _squarefree(report, length=500):
    _sweep(report, [squarefree_word(length)], lambda w: is_power_free(w, 2))


def _modp(report, k=3, p=2, maxlen=9):
    _sweep(report, Alphabet(k).words(maxlen), lambda w: not is_deletable(w, p) or modp_filter(w, p))


def _square_free_words(k, maxlen):
    return shortlex(enumerate_powerfree(k, 2, maxlen))


def _palindromic(report, k=3, maxlen=7):
    _sweep(report, _square_free_words(k, maxlen), lambda x: is_strongly_deletable(palindromic_double(x), 2))


def _separated(report, k=3, maxlen=7):
    for xy in _square_free_words(k, maxlen):
        for cut in range(len(xy)):
            x, y = xy[:cut], xy[cut:]
            report.checked_count += 1
            w = separated_double(x, y)
            if is_deletable(w, 2):
                report.counterexamples.append(w)


def _fibonacci(report, max_index=8, exponents=(2, 3), max_length=13):
    for n in range(max_index + 1):
        s = fibonacci_word(n)
        for p in exponents:
            report.checked_count += 1
            if modp_filter(s, p) or (len(s) <= max_length and is_deletable(s, p)):
                report.counterexamples.append(s)


def _brute_force_deletable(k, p, maxlen):
    return {w for w in Alphabet(k).words(maxlen) if is_deletable(w, p)}


def _insertion(report, k=2, p=2, maxlen=8):
    expected = _brute_force_deletable(k, p, maxlen)
    got = insert_star_bounded({""}, powers_up_to(k, p, maxlen), maxlen)
    report.checked_count = sum(k**n for n in range(maxlen + 1))
    report.counterexamples = shortlex(expected ^ got)


def _powers(report, k=2, p=2, maxlen=8):
    g = gr.build_power_grammar(k, p)
    got = gr.enumerate_language(g, gr.EnumerationBounds(maxlen))
    expected = powers_up_to(k, p, maxlen) | {""}
    report.checked_count = len(expected)
    report.counterexamples = shortlex(expected ^ got.words)
    if not got.complete:
        report.counterexamples.append("<incomplete>")


def _closure(report, k=2, p=2, maxlen=8, linear=False):
    if linear:
        if p != 2:
            raise ValueError("the linear indexed construction is for squares only")
        g = gr.insertion_closure_lig(gr.build_epsilon_grammar(linear=True), gr.build_square_lig(k))
    else:
        g = gr.insertion_closure_indexed(gr.build_epsilon_grammar(), gr.build_power_grammar(k, p))
    got = gr.enumerate_language(g, gr.EnumerationBounds(maxlen))
    expected = _brute_force_deletable(k, p, maxlen)
    report.checked_count = sum(k**n for n in range(maxlen + 1))
    report.counterexamples = shortlex(expected ^ got.words)
    if not got.complete:
        report.counterexamples.append("<incomplete>")


THEOREMS = {
    "binsq": _binsq,
    "sixteen": _sixteen,
    "squarefree": _squarefree,
    "modp": _modp,
    "palindromic": _palindromic,
    "separated": _separated,
    "fibonacci": _fibonacci,
    "insertion": _insertion,
    "powers": _powers,
    "closure": _closure,
}


def verify_theorem(name: str, **params) -> VerificationReport:
    """Run one exhaustive sweep; ``params`` override the sweep's defaults.

    For ``insertion`` and ``closure`` the counterexamples are the words in the
    symmetric difference with the brute-force deletable set.
    """
    try:
        sweep = THEOREMS[name]
    except KeyError:
        raise UnknownTheorem(name) from None
    report = VerificationReport(name, dict(params))
    t0 = time.perf_counter()
    sweep(report, **params)
    report.elapsed = time.perf_counter() - t0
    return report


# -- Myhill-Nerode witnesses --------------------------------------------------


@dataclass
class MNWitnessSet:
    """Prefixes pairwise separated with respect to a square-deletion language.

    ``separators[m][n]`` is a suffix z such that exactly one of
    ``prefixes[m] + z`` and ``prefixes[n] + z`` is in the language.
    """

    language: str
    prefixes: List[str]
    separators: List[List[Optional[str]]]

    def to_dict(self):
        return {"language": self.language, "prefixes": self.prefixes, "separators": self.separators}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def _member_oracle(strong, budget):
    def accepts(w):
        rep = residues(w, 2, limit=budget)
        if rep.truncated:
            raise BudgetExceeded(f"more than {budget} words reachable from {w!r}")
        return rep.strongly_deletable if strong else rep.deletable

    return accepts


def mn_witnesses(k: int, count: int, oracle_budget: int = DEFAULT_LIMIT, strong: bool = False) -> MNWitnessSet:
    """Square-free prefixes w_1, ..., w_count, pairwise separated by reverse(w_m).

    Every separator is checked with the deletion search; a wrong prediction
    raises AssertionError.
    """
    if k < 3:
        raise ValueError("distinguishing prefixes need an alphabet of at least 3 letters")
    if count < 0:
        raise ValueError("count must be non-negative")
    accepts = _member_oracle(strong, oracle_budget)
    word = squarefree_word(count)
    prefixes = [word[: n + 1] for n in range(count)]
    seps: List[List[Optional[str]]] = [[None] * count for _ in range(count)]
    for m in range(count):
        for n in range(m + 1, count):
            z = reverse(prefixes[m])
            inside, outside = prefixes[m] + z, prefixes[n] + z
            if not accepts(inside) or accepts(outside):
                raise AssertionError(f"{z!r} does not separate {prefixes[m]!r} and {prefixes[n]!r}")
            seps[m][n] = seps[n][m] = z
    name = f"SD_{k},2" if strong else f"D_{k},2"
    return MNWitnessSet(name, prefixes, seps)


def check_witnesses(ws: MNWitnessSet, k: int, oracle_budget: int = DEFAULT_LIMIT) -> bool:
    """Re-verify every separator of a witness set independently of how it was built."""
    accepts = _member_oracle(ws.language.startswith("SD"), oracle_budget)
    n = len(ws.prefixes)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            z = ws.separators[i][j]
            if z is None or accepts(ws.prefixes[i] + z) == accepts(ws.prefixes[j] + z):
                return False
    return True
