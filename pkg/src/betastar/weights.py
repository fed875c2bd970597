"""Admissible weight functions on (0, 1) and their cumulative transforms.

Every catalog member is normalized to unit integral.  Besides pointwise
values and two derivatives, a weight exposes its moments tau_n and the
cumulative transforms

    lambda_cap(t) = int_t^1 lambda(s) s^(-delta/nu) ds
    pi_cap(t)     = int_t^1 lambda_cap(s) s^(-(delta/mu - delta/nu + 1)) ds   (gamma > 0)
                  = lambda_cap with nu = alpha                                  (gamma = 0)

pi_cap is evaluated through the order-swapped single integral

    pi_cap(t) = int_t^1 lambda(u) u^(-delta/nu) * (t^-e - u^-e)/e du,
    e = delta/mu - delta/nu   (log(u/t) kernel when mu = nu),

which is the same double integral with the inner variable integrated first.
The literal nested form is kept as pi_cap_nested for cross-checking.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import quadrature, special
from .errors import ParamOutOfRange
from .params import ParameterSet

_EQUAL_PARAM_TOL = 1e-9  # two-parameter weight branch switch |b - a|
_NESTED_INNER_FACTOR = 0.1  # inner tolerance of nested integrals = tol * this


def _as_array(t):
    return np.asarray(t, dtype=float)


# --------------------------------------------------------------------------
# Gauss 2F1 evaluation, robust near argument 1 (needed by the hohlov family)
# --------------------------------------------------------------------------

def _rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles."""
    if x <= 0 and abs(x - round(x)) < 1e-12:
        return 0.0
    return 1.0 / math.gamma(x)


def _gauss2f1(A: float, B: float, C: float, x: float, xc: float | None = None) -> float:
    """2F1(A, B; C; x) for x in [0, 1); connection formula near x = 1.

    xc is the exact complement 1 - x when the caller knows it to better
    precision than the subtraction gives (x saturates at 1.0 in doubles).
    """
    t = (1.0 - x) if xc is None else xc
    if x < 0.98 and t > 0.02:
        return special.hyp2f1(A, B, C, x, tol=1e-13)
    cab = C - A - B
    if abs(cab - round(cab)) > 1e-8:
        f1 = special.hyp2f1(A, B, A + B - C + 1.0, t, tol=1e-13)
        f2 = special.hyp2f1(C - A, C - B, cab + 1.0, t, tol=1e-13)
        g = math.gamma
        c1 = g(C) * g(cab) * _rgamma(C - A) * _rgamma(C - B)
        c2 = g(C) * g(-cab) * _rgamma(A) * _rgamma(B)
        return c1 * f1 + c2 * t**cab * f2
    # integer parameter excess: the connection formula degenerates (log case);
    # fall back to direct summation, which converges for positive excess and
    # fails loudly otherwise
    return special.hyp2f1(A, B, C, x, tol=1e-11)


def _gauss2f1_at_complement(A: float, B: float, C: float, u) -> np.ndarray:
    """2F1(A, B; C; 1 - u) elementwise, with the complement u given exactly."""
    us = _as_array(u)
    out = np.empty(us.shape)
    for i, ui in np.ndenumerate(us):
        ui = float(ui)
        out[i] = _gauss2f1(A, B, C, 1.0 - ui, ui)
    return out


# --------------------------------------------------------------------------
# Weight
# --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Weight:
    """Normalized weight: value/derivatives vectorized over (0,1) arrays."""

    kind: str
    params: dict
    normalization: float
    _value: Callable[[np.ndarray], np.ndarray]
    _derivative: Callable[[np.ndarray], np.ndarray]
    _second: Callable[[np.ndarray], np.ndarray]
    _moment: Callable[[np.ndarray], np.ndarray] | None  # closed form or None

    def value(self, t):
        return self._value(_as_array(t))

    def derivative(self, t):
        return self._derivative(_as_array(t))

    def second_derivative(self, t):
        return self._second(_as_array(t))

    def moment(self, n: int, tol: float = 1e-11) -> float:
        """tau_n = int_0^1 t^n lambda(t) dt."""
        if n < 0:
            raise ValueError("moment order must be >= 0")
        if n == 0:
            return 1.0
        if self._moment is not None:
            return float(self._moment(np.asarray([n]))[0])
        val, _ = quadrature.integrate(lambda t: t**n * self._value(t), 0.0, 1.0, tol)
        return val

    def moments(self, ns: np.ndarray) -> np.ndarray:
        """Vectorized tau_n for integer array ns (closed forms where known)."""
        ns = np.asarray(ns)
        if self._moment is not None:
            return self._moment(ns)
        return np.array([self.moment(int(n)) for n in ns])

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "params": self.params})


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamOutOfRange(msg)


def make_weight(kind: str, **params) -> Weight:
    """Build a catalog weight; raises ParamOutOfRange naming the violated bound.

    Kinds: uniform; bernardi(c); komatu(k, p); hohlov(a, b, c);
    carlson_shaffer(b, c); two_param(a, b); ali_singh(k);
    custom(value[, derivative, second_derivative]).
    """
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise ParamOutOfRange(f"unknown weight kind {kind!r}")
    return builder(**params)


def weight_from_json(doc: str | dict) -> Weight:
    obj = json.loads(doc) if isinstance(doc, str) else doc
    return make_weight(obj["kind"], **obj.get("params", {}))


def _bernardi(c: float = 0.0) -> Weight:
    _check(c > -1.0, f"bernardi needs c > -1, got c = {c}")
    K = 1.0 + c
    return Weight(
        kind="bernardi",
        params={"c": c},
        normalization=K,
        _value=lambda t: K * t**c,
        _derivative=lambda t: K * c * t ** (c - 1.0),
        _second=lambda t: K * c * (c - 1.0) * t ** (c - 2.0),
        _moment=lambda n: (1.0 + c) / (n + c + 1.0),
    )


def _uniform() -> Weight:
    return Weight(
        kind="uniform",
        params={},
        normalization=1.0,
        _value=lambda t: np.ones_like(t),
        _derivative=lambda t: np.zeros_like(t),
        _second=lambda t: np.zeros_like(t),
        _moment=lambda n: 1.0 / (n + 1.0),
    )


def _komatu(k: float = 0.0, p: float = 1.0) -> Weight:
    _check(k > -1.0, f"komatu needs k > -1, got k = {k}")
    _check(p >= 1.0, f"komatu needs p >= 1, got p = {p}")
    K = (1.0 + k) ** p / math.gamma(p)

    def value(t):
        L = np.log(1.0 / t)
        return K * t**k * L ** (p - 1.0)

    def derivative(t):
        L = np.log(1.0 / t)
        if p == 1.0:
            return K * k * t ** (k - 1.0)
        return K * t ** (k - 1.0) * L ** (p - 2.0) * (k * L - (p - 1.0))

    def second(t):
        L = np.log(1.0 / t)
        if p == 1.0:
            return K * k * (k - 1.0) * t ** (k - 2.0)
        if p == 2.0:
            return K * t ** (k - 2.0) * (k * (k - 1.0) * L - (2.0 * k - 1.0))
        return K * t ** (k - 2.0) * L ** (p - 3.0) * (
            k * (k - 1.0) * L * L
            - (p - 1.0) * (2.0 * k - 1.0) * L
            + (p - 1.0) * (p - 2.0)
        )

    return Weight(
        kind="komatu",
        params={"k": k, "p": p},
        normalization=K,
        _value=value,
        _derivative=derivative,
        _second=second,
        _moment=lambda n: ((1.0 + k) / (n + k + 1.0)) ** p,
    )


def _hohlov(a: float, b: float, c: float) -> Weight:
    _check(a > 0, f"hohlov needs a > 0, got a = {a}")
    _check(b > 0, f"hohlov needs b > 0, got b = {b}")
    _check(c > 0, f"hohlov needs c > 0, got c = {c}")
    _check(c - a - b + 1.0 > 0, f"hohlov needs c - a - b > -1, got {c - a - b}")
    lg = special.log_gamma
    K = math.exp(lg(c) - lg(a) - lg(b) - lg(c - a - b + 1.0))
    A, B, C = c - a, 1.0 - a, c - a - b + 1.0
    degenerate = abs(B) < 1e-12 or abs(A) < 1e-12  # 2F1 factor is identically 1

    def omega(t):  # 2F1(c-a, 1-a; c-a-b+1; 1-t) and two derivatives in its argument
        if degenerate:
            return np.ones_like(t)
        return _gauss2f1_at_complement(A, B, C, t)

    def omega1(t):
        if degenerate:
            return np.zeros_like(t)
        return (A * B / C) * _gauss2f1_at_complement(A + 1.0, B + 1.0, C + 1.0, t)

    def omega2(t):
        if degenerate:
            return np.zeros_like(t)
        coef = A * (A + 1.0) * B * (B + 1.0) / (C * (C + 1.0))
        return coef * _gauss2f1_at_complement(A + 2.0, B + 2.0, C + 2.0, t)

    e = c - a - b

    def value(t):
        return K * t ** (b - 1.0) * (1.0 - t) ** e * omega(t)

    def derivative(t):
        w0, w1 = omega(t), omega1(t)
        poly = ((b - 1.0) * (1.0 - t) - e * t) * w0 - t * (1.0 - t) * w1
        return K * t ** (b - 2.0) * (1.0 - t) ** (e - 1.0) * poly

    def second(t):
        w0, w1, w2 = omega(t), omega1(t), omega2(t)
        poly = (
            ((b - 1.0) * (b - 2.0) * (1.0 - t) ** 2
             - 2.0 * (b - 1.0) * e * t * (1.0 - t)
             + e * (e - 1.0) * t * t) * w0
            + (2.0 * e * t - 2.0 * (b - 1.0) * (1.0 - t)) * t * (1.0 - t) * w1
            + t * t * (1.0 - t) ** 2 * w2
        )
        return K * t ** (b - 3.0) * (1.0 - t) ** (e - 2.0) * poly

    w = Weight(
        kind="hohlov",
        params={"a": a, "b": b, "c": c},
        normalization=K,
        _value=value,
        _derivative=derivative,
        _second=second,
        _moment=None,
    )
    if a > 1.0:
        # positivity of the 2F1 factor is only guaranteed for a <= 1
        grid = np.linspace(1e-3, 1.0 - 1e-3, 1001)
        if np.any(w.value(grid) < 0):
            warnings.warn(
                f"hohlov(a={a}, b={b}, c={c}): weight is negative on part of (0,1)",
                UserWarning,
                stacklevel=3,
            )
    return w


def _carlson_shaffer(b: float, c: float) -> Weight:
    _check(b > 0, f"carlson_shaffer needs b > 0, got b = {b}")
    _check(c > b, f"carlson_shaffer needs c > b, got (b, c) = ({b}, {c})")
    lg = special.log_gamma
    K = math.exp(lg(c) - lg(b) - lg(c - b))
    e = c - b - 1.0

    def moment(n):
        n = np.asarray(n, dtype=float)
        # (b)_n / (c)_n via log-gamma, vectorized
        lgv = np.vectorize(math.lgamma)
        return np.exp(lgv(b + n) - lgv(b) - lgv(c + n) + lgv(c))

    return Weight(
        kind="carlson_shaffer",
        params={"b": b, "c": c},
        normalization=K,
        _value=lambda t: K * t ** (b - 1.0) * (1.0 - t) ** e,
        _derivative=lambda t: K * t ** (b - 2.0) * (1.0 - t) ** (e - 1.0)
        * ((b - 1.0) * (1.0 - t) - e * t),
        _second=lambda t: K * t ** (b - 3.0) * (1.0 - t) ** (e - 2.0)
        * ((b - 1.0) * (b - 2.0) * (1.0 - t) ** 2
           - 2.0 * (b - 1.0) * e * t * (1.0 - t)
           + e * (e - 1.0) * t * t),
        _moment=moment,
    )


def _two_param(a: float, b: float) -> Weight:
    _check(a > -1.0, f"two_param needs a > -1, got a = {a}")
    _check(b > -1.0, f"two_param needs b > -1, got b = {b}")
    if abs(b - a) < _EQUAL_PARAM_TOL:
        K = (a + 1.0) ** 2
        return Weight(
            kind="two_param",
            params={"a": a, "b": b},
            normalization=K,
            _value=lambda t: K * t**a * np.log(1.0 / t),
            _derivative=lambda t: K * t ** (a - 1.0) * (a * np.log(1.0 / t) - 1.0),
            _second=lambda t: K * t ** (a - 2.0)
            * (a * (a - 1.0) * np.log(1.0 / t) - (2.0 * a - 1.0)),
            _moment=lambda n: (a + 1.0) ** 2 / (n + a + 1.0) ** 2,
        )
    K = (a + 1.0) * (b + 1.0) / (b - a)
    return Weight(
        kind="two_param",
        params={"a": a, "b": b},
        normalization=K,
        _value=lambda t: K * (t**a - t**b),
        _derivative=lambda t: K * (a * t ** (a - 1.0) - b * t ** (b - 1.0)),
        _second=lambda t: K * (a * (a - 1.0) * t ** (a - 2.0) - b * (b - 1.0) * t ** (b - 2.0)),
        _moment=lambda n: (a + 1.0) * (b + 1.0) / ((n + a + 1.0) * (n + b + 1.0)),
    )


def _ali_singh(k: float) -> Weight:
    _check(0.0 <= k < 1.0, f"ali_singh needs 0 <= k < 1, got k = {k}")
    K = (1.0 - k) * (3.0 - k) / 2.0
    return Weight(
        kind="ali_singh",
        params={"k": k},
        normalization=K,
        _value=lambda t: K * t ** (-k) * (1.0 - t * t),
        _derivative=lambda t: K * t ** (-k - 1.0) * (-k - (2.0 - k) * t * t),
        _second=lambda t: K * t ** (-k - 2.0) * (k * (k + 1.0) - (2.0 - k) * (1.0 - k) * t * t),
        _moment=lambda n: (1.0 - k) * (3.0 - k) / ((n - k + 1.0) * (n - k + 3.0)),
    )


def _custom(value, derivative=None, second_derivative=None) -> Weight:
    raw = quadrature.as_vectorized(value) if not _accepts_arrays(value) else value
    total, _ = quadrature.integrate(raw, 0.0, 1.0, 1e-11)
    _check(total > 0, f"custom weight has nonpositive integral {total}")
    K = 1.0 / total

    def d1(t):
        if derivative is not None:
            f = derivative if _accepts_arrays(derivative) else quadrature.as_vectorized(derivative)
            return K * np.asarray(f(t), dtype=float)
        h = 1e-6
        return K * (np.asarray(raw(t + h)) - np.asarray(raw(t - h))) / (2.0 * h)

    def d2(t):
        if second_derivative is not None:
            f = (second_derivative if _accepts_arrays(second_derivative)
                 else quadrature.as_vectorized(second_derivative))
            return K * np.asarray(f(t), dtype=float)
        h = 1e-4
        return K * (np.asarray(raw(t + h)) - 2.0 * np.asarray(raw(t)) + np.asarray(raw(t - h))) / h**2

    return Weight(
        kind="custom",
        params={},
        normalization=K,
        _value=lambda t: K * np.asarray(raw(t), dtype=float),
        _derivative=d1,
        _second=d2,
        _moment=None,
    )


def _accepts_arrays(fn) -> bool:
    try:
        out = fn(np.asarray([0.25, 0.5]))
    except Exception:
        return False
    return np.asarray(out).shape == (2,)


_BUILDERS = {
    "bernardi": _bernardi,
    "uniform": _uniform,
    "komatu": _komatu,
    "hohlov": _hohlov,
    "carlson_shaffer": _carlson_shaffer,
    "two_param": _two_param,
    "ali_singh": _ali_singh,
    "custom": _custom,
}


# --------------------------------------------------------------------------
# Cumulative transforms
# --------------------------------------------------------------------------

def lambda_cap(w: Weight, p: ParameterSet, t: float, tol: float = 1e-10) -> float:
    """int_t^1 lambda(s) s^(-delta/nu) ds."""
    if p.nu <= 0:
        raise ValueError("lambda_cap needs nu > 0")
    if t >= 1.0:
        return 0.0
    if t <= 0.0:
        raise ValueError("lambda_cap needs t > 0")
    q = p.delta / p.nu
    val, _ = quadrature.integrate(lambda s: w.value(s) * s ** (-q), t, 1.0, tol)
    return val


def pi_cap(w: Weight, p: ParameterSet, t: float, tol: float = 1e-10) -> float:
    """Cumulative transform of lambda_cap (order-swapped single integral)."""
    if p.is_gamma_zero:
        return lambda_cap(w, p, t, tol)
    if t >= 1.0:
        return 0.0
    if t <= 0.0:
        raise ValueError("pi_cap needs t > 0")
    qn = p.delta / p.nu
    e = p.delta / p.mu - qn
    if abs(e) < 1e-8:
        fn = lambda u: w.value(u) * u ** (-qn) * np.log(u / t)
    else:
        tpow = t ** (-e)
        fn = lambda u: w.value(u) * u ** (-qn) * (tpow - u ** (-e)) / e
    val, _ = quadrature.integrate(fn, t, 1.0, tol)
    return val


def pi_cap_nested(w: Weight, p: ParameterSet, t: float, tol: float = 1e-8) -> float:
    """Literal nested evaluation of the double integral (cross-check path).

    Outer tanh-sinh over s with the inner integral computed at tol/10 per
    node; an order of magnitude slower than pi_cap and kept for verification.
    """
    if p.is_gamma_zero:
        return lambda_cap(w, p, t, tol)
    if t >= 1.0:
        return 0.0
    expo = p.delta / p.mu - p.delta / p.nu + 1.0
    inner_tol = tol * _NESTED_INNER_FACTOR

    def outer(s):
        s = np.atleast_1d(s)
        lam = np.array([lambda_cap(w, p, float(si), inner_tol) for si in s])
        return lam * s ** (-expo)

    val, _ = quadrature.integrate(outer, t, 1.0, tol)
    return val


class LimitConditions(NamedTuple):
    lambda_ok: bool
    pi_ok: bool
    lambda_samples: tuple
    pi_samples: tuple


def limit_conditions(w: Weight, p: ParameterSet, tol: float = 1e-9) -> LimitConditions:
    """Numerically probe t^(delta/nu) lambda_cap -> 0 and t^(delta/mu) pi_cap -> 0.

    Samples t in {1e-2, 1e-3, 1e-4}; a sequence counts as vanishing when each
    successive value drops below half the previous one.  Raw triples are
    returned for callers wanting stricter gates.
    """
    if p.is_gamma_zero:
        raise ValueError("limit_conditions applies to gamma > 0")
    ts = (1e-2, 1e-3, 1e-4)
    lam = tuple(t ** (p.delta / p.nu) * lambda_cap(w, p, t, tol) for t in ts)
    pi = tuple(t ** (p.delta / p.mu) * pi_cap(w, p, t, tol) for t in ts)

    def vanishing(seq):
        return all(b < 0.5 * a for a, b in zip(seq, seq[1:]))

    return LimitConditions(vanishing(lam), vanishing(pi), lam, pi)


# --------------------------------------------------------------------------
# Cumulative tables (grid sampling for the monotonicity checks)
# --------------------------------------------------------------------------

_GAUSS_PTS = 16


@dataclass(frozen=True, eq=False)
class CumulativeTables:
    """lambda_cap and pi_cap sampled on an ascending grid in (0, 1).

    Built by backward accumulation from t = 1: per-segment Gauss rules for
    the smooth interior, one adaptive tail integral on [grid[-1], 1].  Both
    sampled transforms are nonnegative and nonincreasing.
    """

    grid: np.ndarray
    lambda_values: np.ndarray
    pi_values: np.ndarray
    params: ParameterSet

    @classmethod
    def build(cls, w: Weight, p: ParameterSet, grid: np.ndarray, tol: float = 1e-10) -> "CumulativeTables":
        grid = np.asarray(grid, dtype=float)
        if grid.ndim != 1 or len(grid) < 2 or np.any(np.diff(grid) <= 0):
            raise ValueError("grid must be ascending with at least two nodes")
        if grid[0] <= 0.0 or grid[-1] >= 1.0:
            raise ValueError("grid must lie strictly inside (0, 1)")
        qn = p.delta / p.nu if p.nu > 0 else None
        if qn is None:
            raise ValueError("cumulative tables need nu > 0")

        lam = cls._backward(lambda u: w.value(u) * u ** (-qn), grid, tol)
        if p.is_gamma_zero:
            pi = lam
        else:
            e = p.delta / p.mu - qn
            if abs(e) < 1e-8:
                aux = cls._backward(lambda u: w.value(u) * u ** (-qn) * np.log(u), grid, tol)
                pi = aux - np.log(grid) * lam
            else:
                qm = p.delta / p.mu
                lam_mu = cls._backward(lambda u: w.value(u) * u ** (-qm), grid, tol)
                pi = (grid ** (-e) * lam - lam_mu) / e
        return cls(grid, lam, np.maximum(pi, 0.0), p)

    @staticmethod
    def _backward(fn, grid: np.ndarray, tol: float) -> np.ndarray:
        x16, w16 = np.polynomial.legendre.leggauss(_GAUSS_PTS)
        tail, _ = quadrature.integrate(fn, float(grid[-1]), 1.0, tol)
        out = np.empty(len(grid))
        out[-1] = tail
        los, his = grid[:-1], grid[1:]
        mids = 0.5 * (los + his)
        halfs = 0.5 * (his - los)
        # nodes: (segments, gauss points)
        xs = mids[:, None] + halfs[:, None] * x16[None, :]
        vals = fn(xs.ravel()).reshape(xs.shape)
        seg = halfs * (vals * w16[None, :]).sum(axis=1)
        out[:-1] = tail + np.cumsum(seg[::-1])[::-1]
        return out
