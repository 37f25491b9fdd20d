"""Exact counting, extremal search, and avoidance search for abelian squares."""

from .counting import (
    Occurrence,
    SquareCensus,
    census,
    census_record,
    count_distinct_ordinary_squares,
    enumerate_abelian_squares,
    enumerate_k_abelian_squares,
    is_abelian_power,
    k_equivalent,
    min_factor_square_mass,
    verify_restricted_abelian_squares,
)
from .families import fici_block, fici_block_distinct_bound, generate, kucherov, named, power, thue_morse
from .search import (
    AvoidanceSpec,
    ProblemSpec,
    SearchBudgetExceeded,
    SearchResult,
    longest_avoiding,
    problem_grid,
    solve,
    solve_blind,
    verify_conjecture,
)
from .words import (
    Alphabet,
    ParikhPrefixTable,
    Word,
    WordFormatError,
    canonical_representative,
    complement,
    conjugates,
    parikh,
    render_word,
    reverse,
    word,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AvoidanceSpec",
    "Occurrence",
    "ParikhPrefixTable",
    "ProblemSpec",
    "SearchBudgetExceeded",
    "SearchResult",
    "SquareCensus",
    "Word",
    "WordFormatError",
    "canonical_representative",
    "census",
    "census_record",
    "complement",
    "conjugates",
    "count_distinct_ordinary_squares",
    "enumerate_abelian_squares",
    "enumerate_k_abelian_squares",
    "fici_block",
    "fici_block_distinct_bound",
    "generate",
    "is_abelian_power",
    "k_equivalent",
    "kucherov",
    "longest_avoiding",
    "min_factor_square_mass",
    "named",
    "parikh",
    "power",
    "problem_grid",
    "render_word",
    "reverse",
    "solve",
    "solve_blind",
    "thue_morse",
    "verify_conjecture",
    "verify_restricted_abelian_squares",
    "word",
]
