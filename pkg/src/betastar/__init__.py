"""betastar: sharp starlikeness bounds for weighted integral transforms.

Computes the sharp bound parameter for which the weighted transform
(int_0^1 lambda(t) (f(tz)/t)^delta dt)^(1/delta) maps the source class into
a starlike class, checks the admissibility and sufficiency conditions on the
weight, applies the transform to series representations, and certifies
starlikeness and sharpness on disk grids.
"""

from .beta import BetaResult, beta_from_ratio, solve_beta, solve_beta_5F4, solve_beta_series
from .conditions import (
    ConditionReport,
    HxiEvaluator,
    check_differential_bound,
    check_monotone_T33,
    check_operator_bounds,
    eval_N_functional,
    minimize_N,
)
from .kernels import g_integral_eval, g_series_eval, g_series_grid, phi_series, psi_series
from .params import ParameterSet, derive_mu_nu, derive_xi
from .quadrature import Integrand, integrate
from .series import (
    PowerSeries,
    cauchy_product,
    eval_series,
    hadamard,
    log_derivative_fraction,
    series_exp,
    series_log,
    series_pow,
)
from .special import HypergeometricSpec, log_gamma, pFq, pochhammer
from .transform import (
    G_series,
    TestFunctionSpec,
    apply_transform,
    extremal_spec,
    make_member,
    recover_F,
)
from .verify import (
    VerificationReport,
    sharpness_probe,
    starlike_margin,
    third_order_functional,
    w_functional_coeff,
    w_functional_reference,
    w_membership,
)
from .weights import (
    CumulativeTables,
    Weight,
    lambda_cap,
    limit_conditions,
    make_weight,
    pi_cap,
    pi_cap_nested,
    weight_from_json,
)

__version__ = "0.1.0"

__all__ = [
    "BetaResult",
    "ConditionReport",
    "CumulativeTables",
    "G_series",
    "HxiEvaluator",
    "HypergeometricSpec",
    "Integrand",
    "ParameterSet",
    "PowerSeries",
    "TestFunctionSpec",
    "VerificationReport",
    "Weight",
    "apply_transform",
    "beta_from_ratio",
    "cauchy_product",
    "check_differential_bound",
    "check_monotone_T33",
    "check_operator_bounds",
    "derive_mu_nu",
    "derive_xi",
    "eval_N_functional",
    "eval_series",
    "extremal_spec",
    "g_integral_eval",
    "g_series_eval",
    "g_series_grid",
    "hadamard",
    "integrate",
    "lambda_cap",
    "limit_conditions",
    "log_derivative_fraction",
    "log_gamma",
    "make_member",
    "make_weight",
    "minimize_N",
    "pFq",
    "phi_series",
    "pi_cap",
    "pi_cap_nested",
    "pochhammer",
    "psi_series",
    "recover_F",
    "series_exp",
    "series_log",
    "series_pow",
    "sharpness_probe",
    "solve_beta",
    "solve_beta_5F4",
    "solve_beta_series",
    "starlike_margin",
    "third_order_functional",
    "w_functional_coeff",
    "w_functional_reference",
    "w_membership",
    "weight_from_json",
]
