import json

import pytest
from hypothesis import given, settings, strategies as st

from powerdel.deletion import (
    InvalidOccurrence,
    delete_at,
    deletion_certificate,
    is_deletable,
    is_strongly_deletable,
    residues,
    successors,
)
from powerdel.words import PowerOccurrence, find_power_occurrences, is_power_free, letter_counts, reverse

from brute import all_words, naive_residues

words3 = st.text(alphabet="abc", max_size=10)


@pytest.mark.parametrize(
    "w, occ, expected",
    [
        ("ababbcbc", (3, 1, 2), "abacbc"),
        ("ababbcbc", (0, 2, 2), "bcbc"),
        ("aa", (0, 1, 2), ""),
    ],
)
def test_delete_at(w, occ, expected):
    assert delete_at(w, PowerOccurrence(*occ)) == expected


def test_delete_at_rejects_non_occurrence():
    with pytest.raises(InvalidOccurrence):
        delete_at("ababbcbc", PowerOccurrence(1, 1, 2))
    with pytest.raises(InvalidOccurrence):
        delete_at("aa", PowerOccurrence(0, 2, 2))


def test_successors():
    assert successors("ababbcbc", 2) == {"bcbc", "abacbc", "abab"}
    assert successors("abc", 2) == set()
    # (0,1),(1,1),(2,1) leave "aa"; (0,2) removes everything
    assert successors("aaaa", 2) == {"aa", ""}


def test_residues_of_the_worked_example():
    rep = residues("ababbcbc", 2)
    assert rep.residues == ["", "abacbc"]
    assert rep.deletable and not rep.strongly_deletable and not rep.truncated
    assert rep.summary() == "deletable=true strong=false residues=[-,abacbc]"


@pytest.mark.parametrize("p", [1, 2, 3])
def test_residues_of_empty_word(p):
    rep = residues("", p)
    assert rep.residues == [""] and rep.deletable and rep.strongly_deletable


def test_residues_of_a_single_square():
    rep = residues("abab", 2)
    assert rep.residues == [""] and rep.deletable and rep.strongly_deletable
    assert rep.visited_count == 2


def test_residue_report_json():
    doc = json.loads(residues("ababbcbc", 2).to_json())
    assert list(doc) == ["source", "p", "residues", "deletable", "strongly_deletable", "visited", "truncated"]
    assert doc["residues"] == ["", "abacbc"]


def test_truncated_search_asserts_nothing():
    rep = residues("ababbcbc", 2, limit=2)
    assert rep.truncated
    assert not rep.deletable and not rep.strongly_deletable


@pytest.mark.parametrize("w, expected", [("abacbc", False), ("ababbcbc", True), ("abaab", False), ("", True)])
def test_is_deletable(w, expected):
    assert is_deletable(w, 2) is expected


@pytest.mark.parametrize("w, expected", [("ababbcbc", False), ("aa", True), ("abba", True), ("abacbc", False)])
def test_is_strongly_deletable(w, expected):
    assert is_strongly_deletable(w, 2) is expected


def test_certificate_follows_the_leftmost_square():
    steps = deletion_certificate("ababbcbc", 2)
    assert [s.occurrence.as_tuple() for s in steps] == [(0, 2, 2), (0, 2, 2)]
    assert [s.after for s in steps] == ["bcbc", ""]
    assert deletion_certificate("abc", 2) is None
    assert deletion_certificate("", 3) == []


@settings(max_examples=200)
@given(words3, st.integers(1, 3))
def test_certificate_replays_to_empty(w, p):
    steps = deletion_certificate(w, p)
    assert (steps is not None) == is_deletable(w, p)
    if steps:
        cur = w
        for s in steps:
            assert s.before == cur
            cur = delete_at(cur, s.occurrence)
            assert cur == s.after
        assert cur == ""


@settings(max_examples=200)
@given(words3, st.integers(2, 3))
def test_deletions_preserve_counts_mod_p(w, p):
    for occ in find_power_occurrences(w, p):
        after = delete_at(w, occ)
        assert len(after) == len(w) - occ.length
        before_c, after_c = letter_counts(w, 3), letter_counts(after, 3)
        assert all((a - b) % p == 0 for a, b in zip(before_c, after_c))


@settings(max_examples=200)
@given(words3, st.integers(2, 3))
def test_reversal_symmetry(w, p):
    assert is_deletable(w, p) == is_deletable(reverse(w), p)
    assert is_strongly_deletable(w, p) == is_strongly_deletable(reverse(w), p)


@pytest.mark.parametrize("k, p", [(2, 2), (3, 2), (2, 3)])
def test_memoised_search_matches_naive_recursion(k, p):
    for w in all_words(k, 8 if k == 2 else 7):
        rep = residues(w, p)
        naive = naive_residues(w, p)
        assert set(rep.residues) == naive, w
        assert rep.deletable == ("" in naive)
        assert rep.strongly_deletable == (naive == {""})
        assert is_deletable(w, p) == rep.deletable
        assert is_strongly_deletable(w, p) == rep.strongly_deletable


@given(words3, st.integers(1, 3))
def test_residues_are_power_free(w, p):
    rep = residues(w, p)
    assert all(is_power_free(r, p) for r in rep.residues)
    if is_power_free(w, p):
        assert rep.residues == [w]
