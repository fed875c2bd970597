"""Truncated complex power series and the manipulations the transform needs:
Hadamard (termwise) product, Cauchy product, log/exp/power, differentiation,
and evaluation on the disk.

Series are immutable; every operation returns a new instance.  Binary
operations truncate to the shorter operand.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonUnitConstantTerm, NonZeroConstantTerm, ZeroDenominator

DEFAULT_ORDER = 64
_CONST_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Coefficients c_0..c_N of sum c_n z^n; truncation order N = len - 1."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(arr.view(float))):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", arr)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> complex:
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        return PowerSeries(self.coeffs[: order + 1])

    def derivative(self) -> "PowerSeries":
        """d/dz: coefficient n of the result is (n+1) c_{n+1}."""
        if self.order == 0:
            return PowerSeries(np.zeros(1, dtype=complex))
        n = np.arange(1, len(self.coeffs))
        return PowerSeries(self.coeffs[1:] * n)

    def shift_up(self) -> "PowerSeries":
        """Multiply by z (index shift; order grows by one)."""
        return PowerSeries(np.concatenate(([0.0 + 0.0j], self.coeffs)))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return PowerSeries(self.coeffs[:n] + other.coeffs[:n])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return PowerSeries(self.coeffs[:n] - other.coeffs[:n])

    def scale(self, a: complex) -> "PowerSeries":
        return PowerSeries(self.coeffs * a)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return cauchy_product(self, other)


def geometric(order: int) -> PowerSeries:
    """All-ones series (truncated 1/(1-z)): the Hadamard identity."""
    return PowerSeries(np.ones(order + 1, dtype=complex))


def hadamard(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Termwise coefficient product, truncated to the shorter operand.

    Composed from real/imaginary parts so the result is bit-identical under
    operand swap (numpy's vectorized complex multiply is not).
    """
    n = min(len(a.coeffs), len(b.coeffs))
    ar, ai = a.coeffs.real[:n], a.coeffs.imag[:n]
    br, bi = b.coeffs.real[:n], b.coeffs.imag[:n]
    return PowerSeries(ar * br - ai * bi + 1j * (ar * bi + ai * br))


def cauchy_product(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Ordinary product of the functions, truncated to the shorter operand."""
    n = min(len(a.coeffs), len(b.coeffs))
    out = np.zeros(n, dtype=complex)
    for k in range(n):
        out[k] = np.dot(a.coeffs[: k + 1], b.coeffs[k::-1][: k + 1])
    return PowerSeries(out)


def series_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """a / b with b_0 != 0, truncated to the shorter operand."""
    n = min(len(a.coeffs), len(b.coeffs))
    if abs(b.coeffs[0]) < 1e-14:
        raise ZeroDenominator("division by a series with (near-)zero constant term")
    out = np.zeros(n, dtype=complex)
    for k in range(n):
        acc = a.coeffs[k]
        if k:
            acc = acc - np.dot(b.coeffs[1 : k + 1], out[k - 1 :: -1][:k])
        out[k] = acc / b.coeffs[0]
    return PowerSeries(out)


def series_log(s: PowerSeries) -> PowerSeries:
    """Formal log of a series with constant term 1 (L' = s'/s recurrence)."""
    if abs(s.coeffs[0] - 1.0) > _CONST_TOL:
        raise NonUnitConstantTerm(f"series_log needs c_0 = 1, got {s.coeffs[0]}")
    n = len(s.coeffs)
    out = np.zeros(n, dtype=complex)
    for k in range(1, n):
        acc = k * s.coeffs[k]
        if k > 1:
            j = np.arange(1, k)
            acc = acc - np.dot(j * out[1:k], s.coeffs[k - 1 : 0 : -1])
        out[k] = acc / k
    return PowerSeries(out)


def series_exp(s: PowerSeries) -> PowerSeries:
    """Formal exp of a series with constant term 0 (E' = s' E recurrence)."""
    if abs(s.coeffs[0]) > _CONST_TOL:
        raise NonZeroConstantTerm(f"series_exp needs c_0 = 0, got {s.coeffs[0]}")
    n = len(s.coeffs)
    out = np.zeros(n, dtype=complex)
    out[0] = 1.0
    for k in range(1, n):
        j = np.arange(1, k + 1)
        out[k] = np.dot(j * s.coeffs[1 : k + 1], out[k - 1 :: -1][:k]) / k
    return PowerSeries(out)


def series_pow(s: PowerSeries, p: float) -> PowerSeries:
    """s^p = exp(p log s) for a series with constant term 1."""
    if abs(s.coeffs[0] - 1.0) > _CONST_TOL:
        raise NonUnitConstantTerm(f"series_pow needs c_0 = 1, got {s.coeffs[0]}")
    return series_exp(series_log(s).scale(p))


def eval_series(s: PowerSeries, z: complex) -> complex:
    """Horner evaluation of the truncated series at z."""
    acc = complex(0.0)
    for c in s.coeffs[::-1]:
        acc = acc * z + c
    return acc


def eval_series_grid(s: PowerSeries, z: np.ndarray) -> np.ndarray:
    """Horner evaluation vectorized over an array of points."""
    acc = np.zeros_like(z, dtype=complex)
    for c in s.coeffs[::-1]:
        acc = acc * z + c
    return acc


def log_derivative_fraction(s: PowerSeries, z: complex) -> complex:
    """z s'(z) / s(z); raises ZeroDenominator when |s(z)| < 1e-14."""
    den = eval_series(s, z)
    if abs(den) < 1e-14:
        raise ZeroDenominator(f"series vanishes at z = {z}")
    return z * eval_series(s.derivative(), z) / den
