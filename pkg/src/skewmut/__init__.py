"""Exact mutation of skew-symmetrizable matrices and weighted diagrams."""

from .classify import (
    MUTATION_ACYCLIC_EXCEPTIONS,
    MutationClassKind,
    NotApplicable,
    QuasiCartanCompanion,
    admissible_companion,
    classify,
    det_markov_consistency,
    is_admissible,
    is_mutation_acyclic_markov,
    markov_constant,
    radical_weights,
)
from .diagram import Diagram, InvalidDiagram, format_diagram, parse_diagram
from .explore import (
    BudgetExceeded,
    ClassExploration,
    FormatError,
    Verdict,
    explore,
    iso_key,
    load_exploration,
    s_of_diagram,
    save_exploration,
    verify_unique_minimum,
)
from .invariants import Flavor, GcdInvariant, RadicalFlavorInvalid, check_invariance, gcd_invariant
from .matrix import (
    CompanionMatrix,
    NotSkewSymmetrizable,
    SkewSymmetrizableMatrix,
    format_matrix,
    parse_matrix,
)
from .radical import (
    EQUAL,
    GREATER,
    LESS,
    NotAPerfectSquare,
    RadicalSum,
    compare_radical_sums,
    is_perfect_square,
    isqrt_exact,
)
from .triple import CanonicalForm, Disconnected, RadicalTriple, WrongSize, parse_triple

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CanonicalForm",
    "ClassExploration",
    "CompanionMatrix",
    "Diagram",
    "Disconnected",
    "EQUAL",
    "Flavor",
    "FormatError",
    "GREATER",
    "GcdInvariant",
    "InvalidDiagram",
    "LESS",
    "MUTATION_ACYCLIC_EXCEPTIONS",
    "MutationClassKind",
    "NotAPerfectSquare",
    "NotApplicable",
    "NotSkewSymmetrizable",
    "QuasiCartanCompanion",
    "RadicalFlavorInvalid",
    "RadicalSum",
    "RadicalTriple",
    "SkewSymmetrizableMatrix",
    "Verdict",
    "WrongSize",
    "admissible_companion",
    "check_invariance",
    "classify",
    "compare_radical_sums",
    "det_markov_consistency",
    "explore",
    "format_diagram",
    "format_matrix",
    "gcd_invariant",
    "is_admissible",
    "is_mutation_acyclic_markov",
    "is_perfect_square",
    "iso_key",
    "isqrt_exact",
    "load_exploration",
    "markov_constant",
    "parse_diagram",
    "parse_matrix",
    "parse_triple",
    "radical_weights",
    "s_of_diagram",
    "save_exploration",
    "verify_unique_minimum",
]
