"""
Grammars for the deletable words
================================

Build the indexed grammar for p-th powers and the linear indexed grammar for
squares, close them under iterated insertion, and compare the result with the
deletion search.
"""

from powerdel import (
    Alphabet,
    EnumerationBounds,
    build_epsilon_grammar,
    build_power_grammar,
    build_square_lig,
    enumerate_language,
    insertion_closure_indexed,
    insertion_closure_lig,
    is_deletable,
    member,
)
from powerdel.words import shortlex

cubes = build_power_grammar(2, 3)
print(cubes.pretty())
print(shortlex(enumerate_language(cubes, EnumerationBounds(6)).words))

squares = build_square_lig(2)
print(squares.pretty())
print(shortlex(enumerate_language(squares, EnumerationBounds(4)).words))

# Inserting squares into the empty word, again and again, gives exactly the
# words that can be reduced to the empty word.
closure = insertion_closure_lig(build_epsilon_grammar(linear=True), build_square_lig(3))
print(len(closure.rules), "rules")
words = enumerate_language(closure, EnumerationBounds(6)).words
brute = {w for w in Alphabet(3).words(6) if is_deletable(w, 2)}
print(len(words), words == brute)
print(member(closure, "ababbcbc"), member(closure, "abacbc"))

# The same for cubes over two letters, with the indexed construction.
closure = insertion_closure_indexed(build_epsilon_grammar(), build_power_grammar(2, 3))
print(shortlex(enumerate_language(closure, EnumerationBounds(6)).words))

# Grammars serialise to JSON for the command line.
print(build_square_lig(1).to_json())
