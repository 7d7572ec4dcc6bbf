"""Gaussian-measure smoothness spaces with variable exponents.

Building blocks: orthonormal Hermite expansions, the Ornstein-Uhlenbeck and
Poisson-Hermite semigroups (spectral and quadrature paths), one-sided stable
subordinator calculus, Luxemburg norms on variable-exponent Lebesgue spaces,
Hardy-type operators on the half-line, and Besov / Triebel-Lizorkin style
smoothness norms built from all of the above, plus a verification CLI that
exercises the quantitative facts the constructions rest on.
"""

from .errors import ConvergenceError, ParameterError
from .quadrature import (
    LogTimeGrid,
    QuadratureContext,
    gauss_hermite_rule,
    grid_scale,
    logtime_grid,
    make_context,
)
from .hermite import (
    HermiteExpansion,
    MultiIndex,
    basis_matrix,
    hermite_1d,
    hermite_all_1d,
    hermite_multi,
    multi_indices_up_to,
    project,
    random_expansion,
)
from .exponents import (
    ExponentFunction,
    estimate_class_constants,
    exponent_from_descriptor,
    harmonic_interpolation,
    holder_conjugate_pair,
    make_constant,
    make_gaussian_family,
    make_time_family,
)
from .subordinator import (
    StableDerivative,
    density,
    derivative_terms,
    moment,
    moment_constant,
    moment_quadrature,
    tv_derivative_bound,
)
from .semigroups import (
    ou_apply,
    ou_apply_kernel,
    ou_maximal,
    ph_apply_subordination,
    ph_apply_subordination_many,
    ph_derivative,
    ph_derivative_bound_check,
    ph_derivative_profile,
)
from .lebesgue import (
    MeasureSpace,
    NormResult,
    conjugate_lower_bound,
    dual_witness,
    gaussian_space,
    holder_check,
    logtime_norm_identity_check,
    logtime_space,
    luxemburg_norm,
    luxemburg_norm_rows,
    minkowski_check,
    modular,
    weighted_space,
)
from .hardy import (
    HardyReport,
    hardy_inequality_check,
    hardy_lower,
    hardy_upper,
    reference_family,
    tail_truncation_bound,
)
from .smoothness import (
    SmoothnessNormReport,
    SmoothnessParams,
    besov_infty_constant,
    besov_norm,
    besov_seminorm,
    derivative_decay_check,
    derivative_tensor,
    equivalence_ratio,
    inclusion_check_besov,
    inclusion_check_tl,
    interpolation_check,
    log_convexity_check,
    membership_check,
    power_norm_identity_check,
    reference_expansions,
    triebel_norm,
    triebel_seminorm,
)
from .suites import (
    CSV_HEADER,
    SuiteConfig,
    SuiteResult,
    csv_rows,
    run_all,
    run_suite,
    suite_ids,
)

__all__ = [
    "ConvergenceError",
    "ParameterError",
    "LogTimeGrid",
    "QuadratureContext",
    "gauss_hermite_rule",
    "grid_scale",
    "logtime_grid",
    "make_context",
    "HermiteExpansion",
    "MultiIndex",
    "basis_matrix",
    "hermite_1d",
    "hermite_all_1d",
    "hermite_multi",
    "multi_indices_up_to",
    "project",
    "random_expansion",
    "ExponentFunction",
    "estimate_class_constants",
    "exponent_from_descriptor",
    "harmonic_interpolation",
    "holder_conjugate_pair",
    "make_constant",
    "make_gaussian_family",
    "make_time_family",
    "StableDerivative",
    "density",
    "derivative_terms",
    "moment",
    "moment_constant",
    "moment_quadrature",
    "tv_derivative_bound",
    "ou_apply",
    "ou_apply_kernel",
    "ou_maximal",
    "ph_apply_subordination",
    "ph_apply_subordination_many",
    "ph_derivative",
    "ph_derivative_bound_check",
    "ph_derivative_profile",
    "MeasureSpace",
    "NormResult",
    "conjugate_lower_bound",
    "dual_witness",
    "gaussian_space",
    "holder_check",
    "logtime_norm_identity_check",
    "logtime_space",
    "luxemburg_norm",
    "luxemburg_norm_rows",
    "minkowski_check",
    "modular",
    "weighted_space",
    "HardyReport",
    "hardy_inequality_check",
    "hardy_lower",
    "hardy_upper",
    "reference_family",
    "tail_truncation_bound",
    "SmoothnessNormReport",
    "SmoothnessParams",
    "besov_infty_constant",
    "besov_norm",
    "besov_seminorm",
    "derivative_decay_check",
    "derivative_tensor",
    "equivalence_ratio",
    "inclusion_check_besov",
    "inclusion_check_tl",
    "interpolation_check",
    "log_convexity_check",
    "membership_check",
    "power_norm_identity_check",
    "reference_expansions",
    "triebel_norm",
    "triebel_seminorm",
    "CSV_HEADER",
    "SuiteConfig",
    "SuiteResult",
    "csv_rows",
    "run_all",
    "run_suite",
    "suite_ids",
]

__version__ = "0.1.0"
