"""Exact linear algebra for unions of subspaces over prime fields."""

from .core import (
    AdditiveReport,
    ChainTerm,
    DEFAULT_COEFFICIENT_CAP,
    DEFAULT_SUBSET_CAP,
    InvarianceReport,
    MultiVectorSpace,
    OperationPolicy,
    TaggedVector,
    ValidationReport,
    additive_formula_check,
    basis_invariance_check,
    component_basis_vectors,
    dim_greedy,
    dim_inclusion_exclusion,
    evaluate_chain,
    greedy_basis,
    intersect_multispaces,
    is_multi_subspace,
    linear_span,
    linearly_dependent,
    union_contains,
    validate_axioms,
    zero_vector,
)
from .errors import (
    AmbientMismatch,
    DimensionMismatch,
    EmptyChain,
    EnumerationTooLarge,
    MultispaceError,
    ParseError,
    PolicyMismatch,
    SearchTooLarge,
    SemanticError,
    TooManyComponents,
    ZeroInverse,
)
from .fp import FpMatrix, FpScalar, RrefResult, fp_inv, is_prime, rref, solve_membership
from .instancefile import format_instance, parse_instance
from .oracle import (
    OracleConfig,
    brute_dependent,
    brute_intersection,
    brute_span,
    brute_subspace_check,
)
from .search import (
    DiscrepancyReport,
    GeneratorConfig,
    find_formula_discrepancies,
    minimize_counterexample,
    random_instance,
)
from .subspace import (
    DEFAULT_ENUMERATION_CAP,
    AmbientId,
    Subspace,
    full_subspace,
    span,
    zero_subspace,
)

__version__ = "0.1.0"

__all__ = [
    "AdditiveReport",
    "AmbientId",
    "AmbientMismatch",
    "ChainTerm",
    "DEFAULT_COEFFICIENT_CAP",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_SUBSET_CAP",
    "DimensionMismatch",
    "DiscrepancyReport",
    "EmptyChain",
    "EnumerationTooLarge",
    "FpMatrix",
    "FpScalar",
    "GeneratorConfig",
    "InvarianceReport",
    "MultiVectorSpace",
    "MultispaceError",
    "OperationPolicy",
    "OracleConfig",
    "ParseError",
    "PolicyMismatch",
    "RrefResult",
    "SearchTooLarge",
    "SemanticError",
    "Subspace",
    "TaggedVector",
    "TooManyComponents",
    "ValidationReport",
    "ZeroInverse",
    "additive_formula_check",
    "basis_invariance_check",
    "brute_dependent",
    "brute_intersection",
    "brute_span",
    "brute_subspace_check",
    "component_basis_vectors",
    "dim_greedy",
    "dim_inclusion_exclusion",
    "evaluate_chain",
    "find_formula_discrepancies",
    "format_instance",
    "fp_inv",
    "full_subspace",
    "greedy_basis",
    "intersect_multispaces",
    "is_multi_subspace",
    "is_prime",
    "linear_span",
    "linearly_dependent",
    "minimize_counterexample",
    "parse_instance",
    "random_instance",
    "rref",
    "solve_membership",
    "span",
    "union_contains",
    "validate_axioms",
    "zero_subspace",
    "zero_vector",
]
