"""Exit criteria.  Every check is exact; one PASS/FAIL line per criterion is
printed in the pytest terminal summary."""

from functools import lru_cache

import pytest

from powerdel.analysis import check_witnesses, insert_star_bounded, mn_witnesses
from powerdel.deletion import is_deletable, is_strongly_deletable
from powerdel.grammar import (
    EnumerationBounds,
    build_epsilon_grammar,
    build_power_grammar,
    build_square_lig,
    enumerate_language,
    insertion_closure_indexed,
    insertion_closure_lig,
)
from powerdel.known import enumerate_powerfree, fibonacci_word, modp_filter, squarefree_word
from powerdel.words import is_power_free, reverse

from brute import all_words, power_factors, powers


@lru_cache(maxsize=None)
def deletable_set(k, p, maxlen):
    return frozenset(w for w in all_words(k, maxlen) if is_deletable(w, p))


def counts_divisible(w, p):
    return all(w.count(c) % p == 0 for c in set(w))


def test_01_binary_squares_are_the_parity_language(criterion):
    words = list(all_words(2, 12))
    assert len(words) == 8190 + 1
    bad = [
        w
        for w in words
        if not (is_deletable(w, 2) == is_strongly_deletable(w, 2) == counts_divisible(w, 2))
    ]
    assert criterion(1, "D_{2,2} = SD_{2,2} = even letter counts, |w| <= 12", not bad, f"{len(words)} words")
    assert bad == []


def test_02_deletable_words_have_counts_divisible_by_p(criterion):
    bad = []
    checked = 0
    for p in (2, 3):
        for w in all_words(3, 9):
            checked += 1
            if is_deletable(w, p) and not counts_divisible(w, p):
                bad.append((w, p))
    assert criterion(2, "deletable => counts = 0 mod p over Sigma_3, |w| <= 9, p in {2,3}", not bad, f"{checked} checks")
    assert bad == []


def test_03_binary_versus_ternary_squares(criterion):
    length_four = list(all_words(2, 4, minlen=4))
    all_have_squares = len(length_four) == 16 and not any(is_power_free(w, 2) for w in length_four)
    long_word = squarefree_word(500)
    ternary_ok = len(long_word) == 500 and is_power_free(long_word, 2) and power_factors(long_word[:150], 2) == []
    ok = all_have_squares and ternary_ok
    assert criterion(3, "16 binary words of length 4 contain squares; 500-letter ternary square-free prefix", ok)
    assert ok


def test_04_palindromic_doubles_are_strongly_deletable(criterion):
    xs = [x for x in enumerate_powerfree(3, 2, 7)]
    assert all(not power_factors(x, 2) for x in xs)
    bad = [x for x in xs if not is_strongly_deletable(x + reverse(x), 2)]
    assert criterion(4, "x x^R in SD_{3,2} for square-free x, |x| <= 7", not bad, f"{len(xs)} words")
    assert bad == []


def test_05_separated_doubles_are_not_deletable(criterion):
    bad = []
    checked = 0
    for xy in enumerate_powerfree(3, 2, 7):
        for cut in range(len(xy)):
            x, y = xy[:cut], xy[cut:]
            checked += 1
            if is_deletable(x + y + reverse(x), 2):
                bad.append((x, y))
    assert criterion(5, "x y x^R not in D_{3,2} for square-free xy, |y| >= 1, |xy| <= 7", not bad, f"{checked} pairs")
    assert bad == []


def test_06_power_grammars(criterion):
    ok = True
    for k, p in [(2, 2), (3, 2), (2, 3)]:
        result = enumerate_language(build_power_grammar(k, p), EnumerationBounds(8))
        ok &= result.complete and set(result.words) == powers(k, p, 8)
    for k in (1, 2, 3):
        for n in range(9):
            lig = enumerate_language(build_square_lig(k), EnumerationBounds(n))
            ig = enumerate_language(build_power_grammar(k, 2), EnumerationBounds(n))
            ok &= lig.complete and ig.complete and lig.words == ig.words
    assert criterion(6, "power grammars generate exactly u^p up to length 8; square LIG agrees", ok)
    assert ok


def test_07_indexed_closure_of_binary_squares(criterion):
    g = insertion_closure_indexed(build_epsilon_grammar(), build_power_grammar(2, 2))
    result = enumerate_language(g, EnumerationBounds(8))
    expected = deletable_set(2, 2, 8)
    by_length = [sum(1 for w in result.words if len(w) == n) for n in range(0, 9, 2)]
    ok = result.complete and result.words == expected and by_length == [1, 2, 8, 32, 128]
    assert criterion(7, "indexed closure (eps <-* L_{2,2}) = D_{2,2} up to length 8", ok, f"sizes {by_length}")
    assert ok


def test_08_closures_match_brute_force(criterion):
    lig = insertion_closure_lig(build_epsilon_grammar(linear=True), build_square_lig(3))
    squares = enumerate_language(lig, EnumerationBounds(8))
    cubes = enumerate_language(
        insertion_closure_indexed(build_epsilon_grammar(), build_power_grammar(2, 3)), EnumerationBounds(9)
    )
    ok = (
        squares.complete
        and squares.words == deletable_set(3, 2, 8)
        and cubes.complete
        and cubes.words == deletable_set(2, 3, 9)
    )
    detail = f"|D_3,2<=8| = {len(squares.words)}, |D_2,3<=9| = {len(cubes.words)}"
    assert criterion(8, "LIG closure = D_{3,2} (<= 8); indexed closure = D_{2,3} (<= 9)", ok, detail)
    assert ok


def test_09_iterated_insertion_of_powers(criterion):
    ok = True
    for k, p in [(2, 2), (3, 2), (2, 3)]:
        capped = {u * p for u in all_words(k, 8 // p, minlen=1)}
        ok &= insert_star_bounded({""}, capped, 8) == deletable_set(k, p, 8)
    assert criterion(9, "set-level (eps <-* L_{k,p}) = D_{k,p} up to length 8", ok)
    assert ok


def test_10_distinguishing_prefixes(criterion):
    ws = mn_witnesses(3, 8)
    ok = len(ws.prefixes) == 8 and len(set(ws.prefixes)) == 8
    ok &= all(is_power_free(w, 2) for w in ws.prefixes)
    ok &= check_witnesses(ws, 3)
    for m in range(8):
        for n in range(m + 1, 8):
            z = ws.separators[m][n]
            ok &= is_deletable(ws.prefixes[m] + z, 2) != is_deletable(ws.prefixes[n] + z, 2)
    assert criterion(10, "8 pairwise-distinguished square-free prefixes for D_{3,2}", ok)
    assert ok


def test_11_fibonacci_words_are_not_deletable(criterion):
    bad = []
    for n in range(9):
        s = fibonacci_word(n)
        for p in (2, 3):
            if modp_filter(s, p) or (len(s) <= 13 and is_deletable(s, p)):
                bad.append((n, p))
    assert criterion(11, "S_n not in D_{2,p} for n <= 8, p in {2,3}", not bad)
    assert bad == []
