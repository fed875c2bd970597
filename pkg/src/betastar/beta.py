"""Sharp bound computation: beta/(1-beta) = - int_0^1 lambda(t) g(t) dt.

Three routes, kept independent so they can cross-check each other:
quadrature of lambda * g, the termwise moment series, and the closed 5F4
form for the beta-density (Carlson-Shaffer) weight at argument -1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, quadrature, special
from .errors import RatioIsMinusOne
from .params import ParameterSet
from .weights import Weight

_RATIO_FLOOR = -1.0 + 1e-12


@dataclass(frozen=True)
class BetaResult:
    """Sharp beta with its ratio beta/(1-beta), method tag and error estimate."""

    beta: float
    ratio: float
    method: str  # quadrature | series_termwise | closed_form_5F4 | closed_form_analytic
    err_estimate: float

    def as_dict(self) -> dict:
        return {
            "beta": self.beta,
            "ratio": self.ratio,
            "method": self.method,
            "err": self.err_estimate,
        }


def beta_from_ratio(ratio: float, method: str, err_ratio: float = 0.0) -> BetaResult:
    """Invert ratio = beta/(1-beta); rejects ratio <= -1 (beta -> -inf)."""
    if ratio <= _RATIO_FLOOR:
        raise RatioIsMinusOne(f"beta/(1-beta) = {ratio:.12g} <= -1: parameters inadmissible")
    beta = ratio / (1.0 + ratio)
    err_beta = err_ratio / (1.0 + ratio) ** 2
    return BetaResult(beta, ratio, method, err_beta)


def solve_beta(w: Weight, p: ParameterSet, tol: float = 1e-10) -> BetaResult:
    """ratio = - int_0^1 lambda(t) g(t) dt by tanh-sinh quadrature.

    gamma > 0 evaluates g through its series; gamma = 0 through the integral
    solution of the first-order kernel ODE (the series form assumes mu > 0).
    """
    if p.is_gamma_zero:
        inner_tol = tol * 0.1

        def fn(t):
            t = np.atleast_1d(t)
            g = np.array([kernels.g_integral_eval(p, float(ti), inner_tol) for ti in t])
            return w.value(t) * g

    else:

        def fn(t):
            return w.value(t) * kernels.g_series_grid(p, t)

    val, err = quadrature.integrate(fn, 0.0, 1.0, tol)
    return beta_from_ratio(-val, "quadrature", err)


def solve_beta_series(w: Weight, p: ParameterSet, N: int = 100_000) -> BetaResult:
    """Termwise moment form:
    ratio = -1 - (2 d^2/(1-xi)) sum_{n=1}^{N} (-1)^n (n+1-xi) tau_n
                                 / ((n nu + d)(n mu + d)).

    Needs gamma > 0; the alternating tail bound (first omitted term) is the
    error estimate.  tau_n decay makes the sum absolutely convergent.
    """
    if p.is_gamma_zero:
        raise ValueError("solve_beta_series needs gamma > 0; use solve_beta")
    d, xi = p.delta, p.xi
    pref = 2.0 * d * d / (1.0 - xi)
    if N <= 0:
        return beta_from_ratio(-1.0, "series_termwise")
    n = np.arange(1, N + 1, dtype=float)
    taus = w.moments(n)
    terms = (n + 1.0 - xi) * taus / ((n * p.nu + d) * (n * p.mu + d))
    signs = np.where(n.astype(int) % 2 == 0, 1.0, -1.0)
    ratio = -1.0 - pref * float(np.dot(signs, terms))
    tail = pref * (N + 2.0 - xi) * float(w.moment(N + 1)) / (((N + 1) * p.nu + d) * ((N + 1) * p.mu + d))
    return beta_from_ratio(ratio, "series_termwise", tail)


def solve_beta_5F4(b: float, c: float, p: ParameterSet, tol: float = 1e-9) -> BetaResult:
    """Closed form for the beta-density weight t^(b-1)(1-t)^(c-b-1) (c > b > 0):

    ratio = 1 - 2 * 5F4(1, b, 2-xi, d/mu, d/nu; c, 1-xi, 1+d/mu, 1+d/nu; -1).
    """
    if p.is_gamma_zero:
        raise ValueError("solve_beta_5F4 needs gamma > 0")
    if not (b > 0 and c > b):
        raise ValueError(f"need c > b > 0, got (b, c) = ({b}, {c})")
    d, xi = p.delta, p.xi
    dm, dn = d / p.mu, d / p.nu
    spec = special.HypergeometricSpec(
        (1.0, b, 2.0 - xi, dm, dn),
        (c, 1.0 - xi, 1.0 + dm, 1.0 + dn),
        -1.0,
    )
    res = special.pFq(spec, tol)
    ratio = 1.0 - 2.0 * res.value
    return beta_from_ratio(ratio, "closed_form_5F4", 2.0 * res.err_estimate)
