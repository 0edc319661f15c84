"""Squareful binary words: solutions of the square product equation, their
classification and enumeration, and the square-root map on lazy infinite
words."""

from .dynamics import (
    PeriodReport,
    SquareStream,
    detect_period,
    find_periodic_shift,
    fixed_point_solutions,
    fixed_point_stream,
    no_square_prefix_word,
    square_prefixes,
    square_root_prefix,
    square_root_prefix_info,
    two_periodic_word,
    verify_fixed_point,
)
from .enumeration import (
    CountReport,
    brute_force_solutions,
    count_solutions,
    divisor_count,
    divisors,
    euler_phi,
    orbit_count,
    orbit_count_direct,
    order_of_two,
    pattern_excess,
)
from .errors import DomainError
from .solutions import (
    Classification,
    Verdict,
    classify,
    decompose_blocks,
    doubling_orbits,
    find_params,
    has_params,
    is_pattern_word,
    is_solution,
    substitute_pattern,
)
from .squares import (
    Params,
    SquareFactorization,
    factor_minimal_squares,
    has_square_root,
    in_language,
    minimal_square_roots,
    minimal_squares,
    square_root,
)
from .standard import (
    StandardWordInfo,
    central_word,
    directive_of_standard,
    fibonacci_word,
    is_reversed_standard,
    natural_params,
    reversed_standard_info,
    standard_from_directive,
)
from .words import (
    PrefixSumWord,
    ScaledWeights,
    are_conjugate,
    exchange_first_two,
    is_primitive,
    prefix_sum_word,
    primitive_root,
    scaled_sum,
    slope,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "CountReport",
    "DomainError",
    "Params",
    "PeriodReport",
    "PrefixSumWord",
    "ScaledWeights",
    "SquareFactorization",
    "SquareStream",
    "StandardWordInfo",
    "Verdict",
    "are_conjugate",
    "brute_force_solutions",
    "central_word",
    "classify",
    "count_solutions",
    "decompose_blocks",
    "detect_period",
    "directive_of_standard",
    "divisor_count",
    "divisors",
    "doubling_orbits",
    "euler_phi",
    "exchange_first_two",
    "factor_minimal_squares",
    "fibonacci_word",
    "find_params",
    "find_periodic_shift",
    "fixed_point_solutions",
    "fixed_point_stream",
    "has_params",
    "has_square_root",
    "in_language",
    "is_pattern_word",
    "is_primitive",
    "is_reversed_standard",
    "is_solution",
    "minimal_square_roots",
    "minimal_squares",
    "natural_params",
    "no_square_prefix_word",
    "orbit_count",
    "orbit_count_direct",
    "order_of_two",
    "pattern_excess",
    "prefix_sum_word",
    "primitive_root",
    "reversed_standard_info",
    "scaled_sum",
    "slope",
    "square_prefixes",
    "square_root",
    "square_root_prefix",
    "square_root_prefix_info",
    "standard_from_directive",
    "substitute_pattern",
    "two_periodic_word",
    "verify_fixed_point",
    "__version__",
]
