"""Deleting p-th powers from words: decision procedures, indexed grammars
for the deletable languages, and exhaustive checks of their properties."""

from .words import (
    Alphabet,
    AlphabetError,
    PowerOccurrence,
    find_power_occurrences,
    is_power,
    is_power_free,
    letter_counts,
    reverse,
)
from .deletion import (
    DeletionStep,
    InvalidOccurrence,
    ResidueReport,
    delete_at,
    deletion_certificate,
    is_deletable,
    is_strongly_deletable,
    residues,
    successors,
)
from .known import (
    OracleVerdict,
    d22_oracle,
    enumerate_powerfree,
    fibonacci_word,
    modp_filter,
    palindromic_double,
    separated_double,
    squarefree_word,
    trivial_oracle,
)
from .grammar import (
    EnumerationBounds,
    IndexedGrammar,
    LinearIndexedGrammar,
    build_epsilon_grammar,
    build_power_grammar,
    build_square_lig,
    derive_successors,
    enumerate_language,
    insertion_closure_indexed,
    insertion_closure_lig,
    member,
)
from .analysis import (
    MNWitnessSet,
    VerificationReport,
    insert_once,
    insert_star_bounded,
    mn_witnesses,
    verify_theorem,
)

__version__ = "0.1.0"
