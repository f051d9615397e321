"""Exact lower bounds for value sets of power-sum polynomials over fields,
with brute-force verification, coefficient certificates, and a replayable
constructive argument.
"""

from .bounds import (
    BoundResult,
    distinct_sum_bound,
    equal_size_bound,
    equal_size_floor_sum,
    erdos_heilbronn_bound,
    floor_minima,
    increasing_sizes_bound,
    iverson,
    least_residue,
    residue_class_bound,
    restricted_floor_bound,
    roots_model_cardinality,
    single_set_conjecture_bound,
    unrestricted_floor_bound,
)
from .coeff import (
    CoefficientCertificate,
    Permutation,
    ProofReplay,
    ResidueClasses,
    ShrinkPlan,
    coefficient_by_expansion,
    coefficient_formula,
    falling_factorial,
    proof_replay,
    replay_shrink,
    target_monomial,
)
from .enumeration import (
    DEFAULT_TUPLE_GUARD,
    MultiplicityProfile,
    SetFamily,
    ValueSetResult,
    family_from_json,
    family_to_json,
    multiplicity_value_set,
    restricted_value_set,
    symmetric_fast_path,
    unrestricted_value_set,
)
from .errors import (
    ArityMismatch,
    ConfigError,
    DivisionByZero,
    ExpansionTooLarge,
    FieldMismatch,
    HypothesisViolated,
    Infeasible,
    InternalInvariantBroken,
    NotInvariant,
    NotPrime,
    NotSymmetric,
    RestrictedSumsError,
    SearchSpaceTooLarge,
)
from .fields import (
    INFINITY,
    ExtendedNat,
    FieldDescriptor,
    FieldElement,
    is_prime,
    parse_field,
    prime_field,
    rational_field,
)
from .nullstellensatz import (
    NullstellensatzCertificate,
    NullstellensatzInstance,
    certify,
)
from .poly import (
    DEFAULT_TERM_GUARD,
    PowerSumForm,
    SparsePoly,
    format_poly,
    is_symmetric,
    parse_poly,
    power_sum_pow,
    vandermonde,
)
from .sweeps import (
    MAX_LATTICE_PRIME,
    check_lattice_bounds,
    derive_seed,
    family_cardinality_fast,
    fold_masks,
    lattice_min_cardinality,
    min_cardinality_by_sizes,
    pow_mod_grid,
    random_leading,
    random_sizes,
    random_subset,
    random_tail,
    value_table,
)

__version__ = "1.0.0"

__all__ = [
    "ArityMismatch",
    "BoundResult",
    "CoefficientCertificate",
    "ConfigError",
    "DEFAULT_TERM_GUARD",
    "DEFAULT_TUPLE_GUARD",
    "DivisionByZero",
    "ExpansionTooLarge",
    "ExtendedNat",
    "FieldDescriptor",
    "FieldElement",
    "FieldMismatch",
    "HypothesisViolated",
    "INFINITY",
    "Infeasible",
    "InternalInvariantBroken",
    "MAX_LATTICE_PRIME",
    "MultiplicityProfile",
    "NotInvariant",
    "NotPrime",
    "NotSymmetric",
    "NullstellensatzCertificate",
    "NullstellensatzInstance",
    "Permutation",
    "PowerSumForm",
    "ProofReplay",
    "ResidueClasses",
    "RestrictedSumsError",
    "SearchSpaceTooLarge",
    "SetFamily",
    "ShrinkPlan",
    "SparsePoly",
    "ValueSetResult",
    "certify",
    "check_lattice_bounds",
    "coefficient_by_expansion",
    "coefficient_formula",
    "derive_seed",
    "distinct_sum_bound",
    "equal_size_bound",
    "equal_size_floor_sum",
    "erdos_heilbronn_bound",
    "falling_factorial",
    "family_cardinality_fast",
    "family_from_json",
    "family_to_json",
    "floor_minima",
    "fold_masks",
    "format_poly",
    "increasing_sizes_bound",
    "is_prime",
    "is_symmetric",
    "iverson",
    "lattice_min_cardinality",
    "least_residue",
    "min_cardinality_by_sizes",
    "multiplicity_value_set",
    "parse_field",
    "parse_poly",
    "pow_mod_grid",
    "power_sum_pow",
    "prime_field",
    "proof_replay",
    "random_leading",
    "random_sizes",
    "random_subset",
    "random_tail",
    "rational_field",
    "replay_shrink",
    "residue_class_bound",
    "restricted_floor_bound",
    "restricted_value_set",
    "roots_model_cardinality",
    "single_set_conjecture_bound",
    "symmetric_fast_path",
    "target_monomial",
    "unrestricted_floor_bound",
    "unrestricted_value_set",
    "value_table",
    "vandermonde",
]
