"""Powers in partial words: analysis, constructions, verification, search."""

from .errors import (
    AlphabetTooSmallError,
    BadExponentError,
    IncompatibleError,
    InvalidCharacterError,
    LetterOutsideAlphabetError,
    NotAPowerError,
    OutOfRangeError,
    PartialWordError,
    ResourceLimitError,
)
from .words import (
    Alphabet,
    PartialWord,
    empty_word,
    factor,
    format_word,
    is_compatible,
    is_contained_in,
    is_strong_periodic,
    join,
    parse_word,
    strong_periods,
)
from .powers import (
    PowerOccurrence,
    PowerProfile,
    distinct_power_factors,
    enumerate_roots,
    is_power,
    power_occurrences,
    power_profile,
    start_positions,
    unique_start_position,
)
from .constructions import cube_examples, prop2_word, prop3_word, square_chain
from .verify import (
    Counterexample,
    VerificationReport,
    verify_construction,
    verify_corollary_full,
    verify_fine_wilf,
    verify_lemma_2k,
    verify_lemma_short,
    verify_lemma_h1,
    verify_theorem_sq_bound,
)
from .search import (
    SearchQuery,
    SearchResult,
    TableCell,
    canonicalize,
    is_canonical,
    known_bound,
    lower_bound_table,
    search_max_powers,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "PartialWord",
    "empty_word",
    "factor",
    "format_word",
    "is_compatible",
    "is_contained_in",
    "is_strong_periodic",
    "join",
    "parse_word",
    "strong_periods",
    "PowerOccurrence",
    "PowerProfile",
    "distinct_power_factors",
    "enumerate_roots",
    "is_power",
    "power_occurrences",
    "power_profile",
    "start_positions",
    "unique_start_position",
    "cube_examples",
    "prop2_word",
    "prop3_word",
    "square_chain",
    "Counterexample",
    "VerificationReport",
    "verify_construction",
    "verify_corollary_full",
    "verify_fine_wilf",
    "verify_lemma_2k",
    "verify_lemma_short",
    "verify_lemma_h1",
    "verify_theorem_sq_bound",
    "SearchQuery",
    "SearchResult",
    "TableCell",
    "canonicalize",
    "is_canonical",
    "known_bound",
    "lower_bound_table",
    "search_max_powers",
    "PartialWordError",
    "InvalidCharacterError",
    "LetterOutsideAlphabetError",
    "OutOfRangeError",
    "IncompatibleError",
    "NotAPowerError",
    "AlphabetTooSmallError",
    "BadExponentError",
    "ResourceLimitError",
    "__version__",
]
