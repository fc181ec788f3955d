"""Exact exterior-algebra shifting and intersecting-family verification.

Multivectors over the rationals, canonical subspaces of a graded component,
symbolic one-parameter limits that degenerate self-annihilating subspaces to
shifted monomial families, extremal-bound certificates, linear-factor
analysis, and desk-scale exhaustive oracles.
"""

from .errors import (
    BudgetExceededError,
    FalsificationError,
    GroundMismatchError,
    HomogeneityError,
    IterationLimitError,
    ParseError,
)
from .exterior import (
    LinearMap,
    Monomial,
    Multivector,
    apply_linear,
    format_multivector,
    linear_combine,
    merge_sign,
    parse_multivector,
    wedge,
)
from .families import (
    SetFamily,
    ShiftPair,
    combinatorial_shift,
    enumerate_families,
    family_decompose,
    is_intersecting,
    is_shifted,
    is_star,
    star_family,
)
from .poly import Poly
from .subspace import MonomialOrder, PlueckerVector, Subspace, intersect, span, subspace_sum
from .limits import (
    TraceStep,
    apply_shear,
    decreasing_pairs,
    initial_subspace,
    limit_shift,
    pluecker_limit,
    shift_map,
    triangular_fixed_point,
)
from .ekr import (
    VerifyReport,
    ekr_bound,
    ekr_pipeline,
    hilton_milner_verify,
    hm_bound,
    self_annihilating,
    shifted_ekr_verify,
)
from .factor import (
    FactorReport,
    annihilator_probe,
    common_annihilator,
    complement_pair_space,
    extract_cofactor,
    factor_report,
    linear_factors,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "FalsificationError",
    "GroundMismatchError",
    "HomogeneityError",
    "IterationLimitError",
    "ParseError",
    "LinearMap",
    "Monomial",
    "Multivector",
    "apply_linear",
    "format_multivector",
    "linear_combine",
    "merge_sign",
    "parse_multivector",
    "wedge",
    "SetFamily",
    "ShiftPair",
    "combinatorial_shift",
    "enumerate_families",
    "family_decompose",
    "is_intersecting",
    "is_shifted",
    "is_star",
    "star_family",
    "Poly",
    "MonomialOrder",
    "PlueckerVector",
    "Subspace",
    "intersect",
    "span",
    "subspace_sum",
    "TraceStep",
    "apply_shear",
    "decreasing_pairs",
    "initial_subspace",
    "limit_shift",
    "pluecker_limit",
    "shift_map",
    "triangular_fixed_point",
    "VerifyReport",
    "ekr_bound",
    "ekr_pipeline",
    "hilton_milner_verify",
    "hm_bound",
    "self_annihilating",
    "shifted_ekr_verify",
    "FactorReport",
    "annihilator_probe",
    "common_annihilator",
    "complement_pair_space",
    "extract_cofactor",
    "factor_report",
    "linear_factors",
]
