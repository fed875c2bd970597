"""Applying the weighted transform to series representations.

The transform acts on the coefficients of (f/z)^delta by multiplication with
the weight moments tau_n; class members are generated from the boundary
Moebius data (x, y) through the psi coefficient kernel, which inverts the
diagonal class functional exactly (also at mu = 0).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ParameterSet
from .series import DEFAULT_ORDER, PowerSeries, series_pow
from .weights import Weight

SHARPNESS_ORDER = 512  # boundary probes need the slow tails


@dataclass(frozen=True)
class TestFunctionSpec:
    """Boundary data G(z) = (1+xz)/(1+yz), |x| = |y| = 1, defining a member
    of the source class with parameter beta."""

    x: complex
    y: complex
    beta: float
    params: ParameterSet

    def __post_init__(self) -> None:
        for name, v in (("x", self.x), ("y", self.y)):
            if abs(abs(v) - 1.0) > 1e-12:
                raise ValueError(f"|{name}| must be 1, got {abs(v)}")
        if not self.beta < 1.0:
            raise ValueError(f"beta must be < 1, got {self.beta}")


def extremal_spec(p: ParameterSet, beta: float) -> TestFunctionSpec:
    """The sharpness-attaining member data x = 1, y = -1."""
    return TestFunctionSpec(1.0 + 0.0j, -1.0 + 0.0j, beta, p)


def make_member(spec: TestFunctionSpec, N: int = DEFAULT_ORDER) -> PowerSeries:
    """Series of (f/z)^delta for the class member with the given boundary data.

    Coefficient n >= 1 is (1-beta)(x-y)(-y)^(n-1) d^2/((d+n nu)(d+n mu));
    the constant term is 1.
    """
    p = spec.params
    d = p.delta
    n = np.arange(1, N + 1, dtype=float)
    kernel = d * d / ((d + n * p.nu) * (d + n * p.mu))
    moebius = (1.0 - spec.beta) * (spec.x - spec.y) * (-spec.y) ** np.arange(N)
    coeffs = np.concatenate(([1.0 + 0.0j], moebius * kernel))
    return PowerSeries(coeffs)


def apply_transform(fz_delta: PowerSeries, w: Weight) -> PowerSeries:
    """(F/z)^delta from (f/z)^delta: coefficient n multiplied by tau_n."""
    if abs(fz_delta.coeffs[0] - 1.0) > 1e-12:
        raise ValueError("apply_transform expects a series with constant term 1")
    ns = np.arange(len(fz_delta.coeffs))
    taus = w.moments(ns).astype(float)
    taus[0] = 1.0
    return PowerSeries(fz_delta.coeffs * taus)


def recover_F(fz_delta_transformed: PowerSeries, delta: float) -> PowerSeries:
    """The transformed function itself: F = z ((F/z)^delta)^(1/delta)."""
    root = series_pow(fz_delta_transformed, 1.0 / delta)
    return root.shift_up()


def G_series(fz_delta_transformed: PowerSeries) -> PowerSeries:
    """G = z (F/z)^delta, the function whose starlikeness is certified."""
    return fz_delta_transformed.shift_up()
