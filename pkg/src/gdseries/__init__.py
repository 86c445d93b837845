"""Generalized Dirichlet series: certified evaluation, growth-invariant
recovery, and the uniqueness-condition machinery built on the even
product f(x) = prod (1 + x^2/lambda_n^{2d})^{a_n}.
"""

from .beurling import (
    AsymptoticLaw,
    BeurlingProduct,
    DecayPoint,
    MellinCheck,
    PsiValue,
    asymptotic_constants,
    beurling_product,
    decay_verification,
    family_growth_alpha,
    log_f,
    mellin_identity_check,
    psi,
    psi_limit_at_zero,
    psi_residue_at_one,
)
from .errors import (
    EvaluationError,
    GDSeriesError,
    NonIntegerDegreeError,
    PoleError,
    QuadratureError,
    SchemaError,
    TailBoundError,
    UnsupportedRegionError,
)
from .gammafn import (
    GammaBoundReport,
    gamma,
    gamma_ratio_bound_check,
    log_gamma,
    recip_gamma,
    stirling_log_gamma,
)
from .growth import (
    FunctionalEquationData,
    GrowthInvariants,
    GrowthProfile,
    LowerBoundHeuristic,
    ProfileSample,
    dedekind_fe,
    fe_from_dict,
    fit_invariants,
    invariants_from_fe,
    lower_bound_heuristic,
    max_modulus_profile,
    zeta_fe,
)
from .series import (
    ClassBReport,
    GeneralDirichletSeries,
    SeriesValue,
    TailBound,
    check_class_B,
    dedekind_quadratic_series,
    derivative,
    dirichlet_l_series,
    evaluate,
    explicit_series,
    partial_sum,
    residue_at_pole,
    riemann_zeta_series,
    series_from_dict,
    series_to_dict,
    shifted_zeta_series,
    to_lambda_merge,
)
from .uniqueness import (
    CandidateForm,
    ConditionReport,
    MatchResult,
    candidate_forms,
    candidate_log_value,
    candidate_value,
    dedekind_condition,
    main_condition,
    match_candidate,
    selberg_sharp_condition,
)
from .zetafns import (
    character_table,
    dedekind_zeta_quadratic,
    hurwitz_zeta,
    is_fundamental_discriminant,
    kronecker_l,
    kronecker_symbol,
    quadratic_ideal_counts,
    riemann_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticLaw",
    "BeurlingProduct",
    "CandidateForm",
    "ClassBReport",
    "ConditionReport",
    "DecayPoint",
    "EvaluationError",
    "FunctionalEquationData",
    "GDSeriesError",
    "GammaBoundReport",
    "GeneralDirichletSeries",
    "GrowthInvariants",
    "GrowthProfile",
    "LowerBoundHeuristic",
    "MatchResult",
    "MellinCheck",
    "NonIntegerDegreeError",
    "PoleError",
    "ProfileSample",
    "PsiValue",
    "QuadratureError",
    "SchemaError",
    "SeriesValue",
    "TailBound",
    "TailBoundError",
    "UnsupportedRegionError",
    "asymptotic_constants",
    "beurling_product",
    "candidate_forms",
    "candidate_log_value",
    "candidate_value",
    "character_table",
    "check_class_B",
    "decay_verification",
    "dedekind_condition",
    "dedekind_fe",
    "dedekind_quadratic_series",
    "dedekind_zeta_quadratic",
    "derivative",
    "dirichlet_l_series",
    "evaluate",
    "explicit_series",
    "family_growth_alpha",
    "fe_from_dict",
    "fit_invariants",
    "gamma",
    "gamma_ratio_bound_check",
    "hurwitz_zeta",
    "invariants_from_fe",
    "is_fundamental_discriminant",
    "kronecker_l",
    "kronecker_symbol",
    "log_f",
    "log_gamma",
    "lower_bound_heuristic",
    "main_condition",
    "match_candidate",
    "max_modulus_profile",
    "mellin_identity_check",
    "partial_sum",
    "psi",
    "psi_limit_at_zero",
    "psi_residue_at_one",
    "quadratic_ideal_counts",
    "recip_gamma",
    "residue_at_pole",
    "riemann_zeta",
    "riemann_zeta_series",
    "selberg_sharp_condition",
    "series_from_dict",
    "series_to_dict",
    "shifted_zeta_series",
    "stirling_log_gamma",
    "to_lambda_merge",
    "zeta_fe",
]
