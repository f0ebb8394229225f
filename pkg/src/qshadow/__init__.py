"""Exact quantum weight enumerators, shadow transforms, and certified
linear-programming distance bounds for quantum codes.

The package computes the enumerator pair (A, B) and the shadow
enumerator S of a code or operator pair in exact rational arithmetic,
relates them through Krawtchouk-coefficient transforms, evaluates both
combinatorially for additive (stabilizer) codes and numerically through
a dense-matrix oracle at small qubit counts, and turns the resulting
constraint system into certified feasibility verdicts: every bound
comes with an exact witness enumerator or an exact refutation.
"""

from .codes import (
    AdditiveCode,
    WeightDistribution,
    classify_parity,
    code_enumerators,
    dual_distribution,
    enumerate_group,
    five_qubit_code,
    five_qubit_state,
    is_real,
    load_code,
    observed_distance,
    parse_code_file,
    random_additive_code,
    shadow_distribution,
    shadow_distribution_direct,
    shadow_membership,
    weight_distribution,
)
from .enumerators import (
    Enumerator,
    analytic_distance_bound,
    even_subcode_enumerators,
    extend_self_dual,
    krawtchouk,
    krawtchouk_table,
    macwilliams,
    macwilliams_by_substitution,
    max_correctable,
    shadow_transform,
    shadow_transform_by_substitution,
)
from .lp import (
    BoundOptions,
    FeasibilityResult,
    LPProblem,
    LPRow,
    TableRow,
    bound_table,
    build_lp,
    distance_bound,
    feasibility_profile,
    result_to_json,
    solve_feasibility,
    table_to_csv,
    table_to_json,
    verify_certificate,
    verify_witness,
)
from .oracle import (
    DenseOperator,
    enum_a,
    enum_b,
    enum_s,
    pauli_expansion_coeff,
    pauli_matrix,
    projection_from_additive,
    random_hermitian,
    random_projection,
    random_psd,
    tilde,
    trace_pauli_product,
)
from .paulis import (
    PauliElement,
    PhasedPauli,
    format_pauli,
    multiply,
    parse_pauli,
    symplectic_product,
    weight,
    weight_y,
)
from .verify import IdentityReport, VerificationReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "AdditiveCode",
    "BoundOptions",
    "DenseOperator",
    "Enumerator",
    "FeasibilityResult",
    "IdentityReport",
    "LPProblem",
    "LPRow",
    "PauliElement",
    "PhasedPauli",
    "TableRow",
    "VerificationReport",
    "WeightDistribution",
    "analytic_distance_bound",
    "bound_table",
    "build_lp",
    "classify_parity",
    "code_enumerators",
    "distance_bound",
    "dual_distribution",
    "enum_a",
    "enum_b",
    "enum_s",
    "enumerate_group",
    "even_subcode_enumerators",
    "extend_self_dual",
    "feasibility_profile",
    "five_qubit_code",
    "five_qubit_state",
    "format_pauli",
    "is_real",
    "krawtchouk",
    "krawtchouk_table",
    "load_code",
    "macwilliams",
    "macwilliams_by_substitution",
    "max_correctable",
    "multiply",
    "observed_distance",
    "parse_code_file",
    "parse_pauli",
    "pauli_expansion_coeff",
    "pauli_matrix",
    "projection_from_additive",
    "random_additive_code",
    "random_hermitian",
    "random_projection",
    "random_psd",
    "result_to_json",
    "run_verification",
    "shadow_distribution",
    "shadow_distribution_direct",
    "shadow_membership",
    "shadow_transform",
    "shadow_transform_by_substitution",
    "solve_feasibility",
    "symplectic_product",
    "table_to_csv",
    "table_to_json",
    "tilde",
    "trace_pauli_product",
    "verify_certificate",
    "verify_witness",
    "weight",
    "weight_distribution",
    "weight_y",
]
