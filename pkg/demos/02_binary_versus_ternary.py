"""
Binary squares are easy, ternary squares are not
================================================

Over two letters a word reduces to the empty word exactly when both letter
counts are even.  Over three letters arbitrarily long square-free words exist
and the parity test stops working.
"""

from collections import Counter

from powerdel import Alphabet, d22_oracle, is_deletable, is_power_free, is_strongly_deletable, squarefree_word
from powerdel.analysis import verify_theorem

# Every binary word of length 4 contains a square...
print([w for w in Alphabet(2).words(4, minlen=4) if is_power_free(w, 2)])

# ...but the fixed point of a -> abc, b -> ac, c -> b never does.
print(squarefree_word(30), is_power_free(squarefree_word(500), 2))

# Binary words up to length 10: deletable, strongly deletable and the parity
# test all agree.
disagreements = [
    w for w in Alphabet(2).words(10) if not (is_deletable(w, 2) == is_strongly_deletable(w, 2) == d22_oracle(w))
]
print("disagreements:", disagreements)

# Over three letters, count the even-count words that still are not deletable.
stuck = Counter()
for w in Alphabet(3).words(8):
    if all(w.count(c) % 2 == 0 for c in "abc") and not is_deletable(w, 2):
        stuck[len(w)] += 1
print("ternary even-count words that are not deletable, by length:", dict(stuck))

# The same sweeps, packaged.
print(verify_theorem("binsq", maxlen=10).to_json())
print(verify_theorem("modp", k=3, p=3, maxlen=7).to_json())
