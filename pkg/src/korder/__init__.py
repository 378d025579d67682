"""Numerics for convex maps of a given order.

Evaluation of the extremal map and its normalized form, the image
boundary curve and membership tests, the peak boundary height and
directional infima, randomized checking of the subordination, growth
and starlike-average statements, classical convexity criteria, and a
verification harness that re-derives every reproducible numeric claim.
"""

from .boundary import (
    AsymptoteSpec,
    BoundarySample,
    asymptote,
    boundary_point,
    boundary_uv,
    contains,
    sample_boundary,
    turning_angle,
    v_half,
)
from .criteria import (
    COUNTEREXAMPLE,
    CounterexampleReport,
    PolynomialFunction,
    alexander_sum,
    counterexample_check,
    h1,
    h2,
    q_gamma,
)
from .errors import ConvergenceError, DomainError, SingularInputError, SolverFailure
from .extremal import (
    Order,
    convexity_transform,
    h_alpha,
    h_alpha_prime,
    h_alpha_series,
    k_alpha,
    k_alpha_prime,
    kustner_inf,
    kustner_lower_bound,
    kustner_numeric_min,
    omega_partial,
    pochhammer_quotient,
)
from .herglotz import (
    AtomicMeasure,
    CheckVerdict,
    GeneratedFunction,
    PolarGrid,
    StarlikeReport,
    SweepReport,
    Violation,
    convex_order_estimate,
    covering_radius_check,
    f_prime,
    f_value,
    f_value_many,
    growth_sweep,
    im_ratio_bound_check,
    min_re_star,
    random_measure,
    single_atom,
    starlike_average_sweep,
    subordination_sweep,
)
from .solver import (
    InfimumResult,
    cot_sum,
    cot_sum_deriv,
    critical_angle,
    critical_angle_residual,
    directional_infimum,
    max_boundary_imag,
    peak_expr,
    turning_angle_inverse,
)
from .verify import Check, VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "AsymptoteSpec",
    "AtomicMeasure",
    "BoundarySample",
    "COUNTEREXAMPLE",
    "Check",
    "CheckVerdict",
    "ConvergenceError",
    "CounterexampleReport",
    "DomainError",
    "GeneratedFunction",
    "InfimumResult",
    "Order",
    "PolarGrid",
    "PolynomialFunction",
    "SingularInputError",
    "SolverFailure",
    "StarlikeReport",
    "SweepReport",
    "VerificationReport",
    "Violation",
    "alexander_sum",
    "asymptote",
    "boundary_point",
    "boundary_uv",
    "contains",
    "convex_order_estimate",
    "convexity_transform",
    "cot_sum",
    "cot_sum_deriv",
    "counterexample_check",
    "covering_radius_check",
    "critical_angle",
    "critical_angle_residual",
    "directional_infimum",
    "f_prime",
    "f_value",
    "f_value_many",
    "growth_sweep",
    "h1",
    "h2",
    "h_alpha",
    "h_alpha_prime",
    "h_alpha_series",
    "im_ratio_bound_check",
    "k_alpha",
    "k_alpha_prime",
    "kustner_inf",
    "kustner_lower_bound",
    "kustner_numeric_min",
    "max_boundary_imag",
    "min_re_star",
    "omega_partial",
    "peak_expr",
    "pochhammer_quotient",
    "q_gamma",
    "random_measure",
    "sample_boundary",
    "single_atom",
    "starlike_average_sweep",
    "subordination_sweep",
    "turning_angle",
    "turning_angle_inverse",
    "v_half",
    "verify_all",
]
