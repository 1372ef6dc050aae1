"""
Deleting squares from a word
============================

Delete square factors from ``ababbcbc`` in every possible order and look at
what is left once no square remains.
"""

from powerdel import deletion_certificate, find_power_occurrences, residues, successors

w = "ababbcbc"

# The three square factors, as (start, period, exponent).
for occ in find_power_occurrences(w, 2):
    print(occ.as_tuple(), w[occ.start : occ.end])

# One deletion step from w leads to three different words.
print(sorted(successors(w, 2)))

# Following every deletion sequence to the end leaves either nothing or
# abacbc, so w is deletable but not strongly deletable.
report = residues(w, 2)
print(report.summary())

# A replayable witness for deletability.
for step in deletion_certificate(w, 2):
    print(step)

# abacbc has an even number of every letter and still cannot be reduced.
print(residues("abacbc", 2).summary())
