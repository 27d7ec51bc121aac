"""Decide automaticity of uniformly recurrent substitutive sequences.

The engine works on exact integers throughout.  A verdict for a primitive
substitution comes with the numbers needed to re-check it by hand, and an
automatic input can be compiled into a constant-length substitution and a
base-k digit-reading automaton.
"""

from .errors import (
    ContractViolation,
    FiniteSystemError,
    MorphicError,
    NonerasingError,
    NotLeftProperError,
    NotPrimitiveError,
    OrbitCapExceeded,
)
from .words import (
    Alphabet,
    Coding,
    FixedPointSeed,
    Morphism,
    PeriodicityReport,
    Substitution,
    apply,
    coding_from_map,
    compose,
    expand_prefix,
    factor_complexity,
    factors_of_length,
    find_fixed_point_seed,
    incidence_matrix,
    is_primitive,
    periodicity_probe,
    power,
    substitution,
    two_factor_language,
)
from .returns import (
    ReturnSystem,
    compute_return_system,
    factorize_over_returns,
    first_return_word,
)
from .automaticity import (
    Analysis,
    Automatic,
    NotAutomatic,
    Periodic,
    UnresolvedPeriodicity,
    analyze,
    decide,
    decide_left_proper,
    minimal_root,
    nonsingular_shortcut,
)
from .dekking import (
    DFAO,
    ConstantLengthPresentation,
    build_presentation,
    evaluate,
    merge_letters,
    to_dfao,
)

__version__ = "0.1.0"

__all__ = [
    "ContractViolation",
    "FiniteSystemError",
    "MorphicError",
    "NonerasingError",
    "NotLeftProperError",
    "NotPrimitiveError",
    "OrbitCapExceeded",
    "Alphabet",
    "Coding",
    "FixedPointSeed",
    "Morphism",
    "PeriodicityReport",
    "Substitution",
    "apply",
    "coding_from_map",
    "compose",
    "expand_prefix",
    "factor_complexity",
    "factors_of_length",
    "find_fixed_point_seed",
    "incidence_matrix",
    "is_primitive",
    "periodicity_probe",
    "power",
    "substitution",
    "two_factor_language",
    "ReturnSystem",
    "compute_return_system",
    "factorize_over_returns",
    "first_return_word",
    "Analysis",
    "Automatic",
    "NotAutomatic",
    "Periodic",
    "UnresolvedPeriodicity",
    "analyze",
    "decide",
    "decide_left_proper",
    "minimal_root",
    "nonsingular_shortcut",
    "DFAO",
    "ConstantLengthPresentation",
    "build_presentation",
    "evaluate",
    "merge_letters",
    "to_dfao",
]
