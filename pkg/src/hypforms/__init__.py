"""Saddle-only binary forms: exact certification, index classification,
witness families, asymptotic-curve geometry, and verification suites.

A homogeneous polynomial in two variables is accepted here when its Hessian
determinant is strictly negative away from the origin, so its graph is
saddle-shaped along every direction.  Everything decision-like is computed
in exact rational arithmetic and returns a certificate or a witness; floats
appear only in the numeric cross-checks and figure emission.
"""

from .core import (
    BinaryForm,
    LinearForm,
    NotHyperbolicError,
    ParseError,
    Rat,
    UniPoly,
    coeff_vector_string,
    euler_check,
    format_form,
    parse_form,
    rotational_derivative,
)
from .certify import (
    Certificate,
    SturmChain,
    hess_linear_product,
    hessian,
    is_hyperbolic,
    is_hyperbolic_polar,
    is_negative_form,
    is_nonpositive_on_unit_interval,
    linear_extension_is_hyperbolic,
    polar_form,
    require_hyperbolic,
    sturm_chain,
    sturm_count,
)
from .classify import (
    ComponentReport,
    CurveSample,
    RefinementError,
    admissible_indices,
    classify_form,
    count_real_linear_factors,
    curve_samples,
    index_gamma,
    num_components,
    same_component,
    winding_alpha_numeric,
    winding_gamma_numeric,
    zeros_vs_critical_points,
)
from .families import (
    FamilyMember,
    arnold,
    f_family,
    g_even,
    p_factorized,
    representatives,
    table1,
)
from .asymptotics import (
    CurvePolyline,
    IsotopyCheck,
    QuadFormAt,
    asymptotic_directions,
    asymptotic_residual,
    check_isotopies,
    discriminant_omega,
    integrate_curve,
    poincare_index_origin,
    polylines_to_csv,
    polylines_to_svg,
    second_fundamental_form,
)
from .verify import (
    DEFAULT_SEED,
    SUITE_NAMES,
    SuiteReport,
    run_suite,
    suite_lemma1,
)

__all__ = [
    "BinaryForm",
    "Certificate",
    "ComponentReport",
    "CurvePolyline",
    "CurveSample",
    "DEFAULT_SEED",
    "FamilyMember",
    "IsotopyCheck",
    "LinearForm",
    "NotHyperbolicError",
    "ParseError",
    "QuadFormAt",
    "Rat",
    "RefinementError",
    "SUITE_NAMES",
    "SturmChain",
    "SuiteReport",
    "UniPoly",
    "admissible_indices",
    "arnold",
    "asymptotic_directions",
    "asymptotic_residual",
    "check_isotopies",
    "classify_form",
    "coeff_vector_string",
    "count_real_linear_factors",
    "curve_samples",
    "discriminant_omega",
    "euler_check",
    "f_family",
    "format_form",
    "g_even",
    "hess_linear_product",
    "hessian",
    "index_gamma",
    "integrate_curve",
    "is_hyperbolic",
    "is_hyperbolic_polar",
    "is_negative_form",
    "is_nonpositive_on_unit_interval",
    "linear_extension_is_hyperbolic",
    "num_components",
    "p_factorized",
    "parse_form",
    "poincare_index_origin",
    "polar_form",
    "polylines_to_csv",
    "polylines_to_svg",
    "representatives",
    "require_hyperbolic",
    "rotational_derivative",
    "run_suite",
    "same_component",
    "second_fundamental_form",
    "sturm_chain",
    "sturm_count",
    "suite_lemma1",
    "table1",
    "winding_alpha_numeric",
    "winding_gamma_numeric",
    "zeros_vs_critical_points",
]
