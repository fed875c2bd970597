"""Auxiliary kernels of the transform: the coefficient kernels psi and phi,
and the decreasing kernel g(t) whose weighted integral fixes the sharp bound.

g has two equivalent representations:

  series   g(t) = 1 + (2 d^2/(1-xi)) sum_{n>=1} (-1)^n (n+1-xi) t^n
                                      / ((n*nu + d)(n*mu + d))        (gamma > 0)
  integral (1+g)/2 as an explicit single (gamma = 0) or double (gamma > 0)
           integral of a rational kernel.

The series is the source of truth for gamma > 0; the integral form is the
independent oracle.  Near t = 1 the series converges only conditionally, so
evaluation switches from direct summation (t <= 0.5) to CVZ alternating-series
acceleration (t > 0.5); both paths use the same coefficients.
"""

from __future__ import annotations

import math

import numpy as np

from . import quadrature
from .errors import SeriesDiverged
from .params import ParameterSet
from .series import PowerSeries

_DIRECT_T_MAX = 0.5
_DIRECT_TERMS = 160  # 0.5^160 ~ 7e-49: below any tolerance in play
_CVZ_TERMS = 48


def _check_kernel_params(p: ParameterSet) -> None:
    if p.nu <= 0:
        raise ValueError("kernel evaluation needs nu > 0 (alpha > 0 when gamma = 0)")


def psi_series(p: ParameterSet, N: int) -> PowerSeries:
    """Coefficients delta^2 / ((delta + n nu)(delta + n mu)), n = 0..N."""
    _check_kernel_params(p)
    n = np.arange(N + 1, dtype=float)
    coeffs = p.delta**2 / ((p.delta + n * p.nu) * (p.delta + n * p.mu))
    return PowerSeries(coeffs.astype(complex))


def phi_series(p: ParameterSet, N: int) -> PowerSeries:
    """(z * psi)' coefficientwise: (n+1) delta^2 / ((delta + n nu)(delta + n mu))."""
    _check_kernel_params(p)
    n = np.arange(N + 1, dtype=float)
    coeffs = (n + 1.0) * p.delta**2 / ((p.delta + n * p.nu) * (p.delta + n * p.mu))
    return PowerSeries(coeffs.astype(complex))


def _series_tail_sum(p: ParameterSet, t: np.ndarray) -> np.ndarray:
    """S(t) = sum_{n>=1} (-1)^n (n+1-xi) t^n / ((n nu + d)(n mu + d)), vectorized."""
    d, mu, nu, xi = p.delta, p.mu, p.nu, p.xi
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)

    small = t <= _DIRECT_T_MAX
    if small.any():
        ts = t[small]
        acc = np.zeros_like(ts)
        power = np.ones_like(ts)
        for n in range(1, _DIRECT_TERMS + 1):
            power = power * ts
            cn = (n + 1.0 - xi) / ((n * nu + d) * (n * mu + d))
            acc += (-1.0) ** n * cn * power
        out[small] = acc

    large = ~small
    if large.any():
        tl = t[large]
        if np.any(tl > 1.0 + 1e-12):
            raise SeriesDiverged(f"kernel series needs t <= 1, got max {tl.max()}")
        # S = -sum_{m>=0} (-1)^m a_m, a_m = c_{m+1} t^{m+1}; CVZ acceleration
        n = _CVZ_TERMS
        dd = (3.0 + math.sqrt(8.0)) ** n
        dd = (dd + 1.0 / dd) / 2.0
        b = -1.0
        c = -dd
        s = np.zeros_like(tl)
        power = tl.copy()  # t^{m+1}
        for m in range(n):
            c = b - c
            k = m + 1
            a_m = (k + 1.0 - xi) / ((k * nu + d) * (k * mu + d)) * power
            s += c * a_m
            b *= (m + n) * (m - n) / ((m + 0.5) * (m + 1.0))
            power = power * tl
        out[large] = -s / dd
    return out


def g_series_eval(p: ParameterSet, t: float, tol: float = 1e-12) -> float:
    """g(t) from its alternating series; g(0) = 1 exactly.

    Equals 2 * 4F3(1, 2-xi, d/mu, d/nu; 1-xi, 1+d/mu, 1+d/nu; -t) - 1 for
    gamma > 0.  tol is accepted for interface symmetry; both summation paths
    deliver near machine accuracy on [0, 1].
    """
    _check_kernel_params(p)
    if p.mu <= 0:
        raise ValueError("g_series_eval needs gamma > 0 (mu > 0); use g_integral_eval")
    if t == 0.0:
        return 1.0
    if not 0.0 <= t <= 1.0 + 1e-12:
        raise SeriesDiverged(f"kernel series needs t in [0, 1], got {t}")
    s = _series_tail_sum(p, np.asarray([t]))[0]
    return 1.0 + (2.0 * p.delta**2 / (1.0 - p.xi)) * float(s)


def g_series_grid(p: ParameterSet, t: np.ndarray) -> np.ndarray:
    """Vectorized g_series_eval over an array of abscissae in [0, 1]."""
    _check_kernel_params(p)
    if p.mu <= 0:
        raise ValueError("g_series_grid needs gamma > 0 (mu > 0)")
    t = np.asarray(t, dtype=float)
    s = _series_tail_sum(p, t)
    out = 1.0 + (2.0 * p.delta**2 / (1.0 - p.xi)) * s
    return np.where(t == 0.0, 1.0, out)


def _halfplane_kernel(x: np.ndarray, xi: float) -> np.ndarray:
    return (1.0 - xi * (1.0 + x)) / ((1.0 - xi) * (1.0 + x) ** 2)


def g_integral_eval(p: ParameterSet, t: float, tol: float = 1e-10) -> float:
    """g(t) from the closed integral solution of its defining ODE.

    gamma = 0:  (1+g)/2 = (d t^(-d/a)/a) int_0^t r^(d/a-1) K(r) dr
    gamma > 0:  (1+g)/2 = int_0^1 int_0^1 K(t r^(nu/d) s^(mu/d)) dr ds
    with K(x) = (1 - xi(1+x)) / ((1-xi)(1+x)^2).
    """
    _check_kernel_params(p)
    if t == 0.0:
        return 1.0
    if not 0.0 < t <= 1.0:
        raise ValueError(f"g_integral_eval needs t in [0, 1], got {t}")
    d, xi = p.delta, p.xi
    if p.is_gamma_zero:
        a = p.nu  # = alpha
        q = d / a

        def fn(r):
            return r ** (q - 1.0) * _halfplane_kernel(r, xi)

        val, _ = quadrature.integrate(fn, 0.0, t, tol)
        half = q * t ** (-q) * val
        return 2.0 * half - 1.0

    en, em = p.nu / d, p.mu / d
    inner_tol = tol * 0.1

    def outer(r):
        r = np.atleast_1d(r)
        out = np.empty_like(r)
        for i, ri in enumerate(r):
            x_base = t * ri**en

            def inner(s):
                return _halfplane_kernel(x_base * s**em, xi)

            out[i], _ = quadrature.integrate(inner, 0.0, 1.0, inner_tol)
        return out

    half, _ = quadrature.integrate(outer, 0.0, 1.0, tol)
    return 2.0 * half - 1.0
