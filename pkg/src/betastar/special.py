"""Pochhammer symbol, log-gamma, generalized hypergeometric series pFq,
and an alternating-series accelerator for boundary-argument evaluation.

pFq is summed directly from its defining series.  Inside the unit disk the
terms decay geometrically; at argument -1 the series is alternating and the
partial-sum error is bounded by the first omitted term, with Cohen-Rodriguez
Villegas-Zagier (CVZ) acceleration available where direct summation is too
slow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import BadDenominator, DivergentSeries, NonPositiveArgument

PFQ_TOL = 1e-12
PFQ_MAX_TERMS = 100_000
# minimum terms before the two-successive-small-terms stopping rule applies
# at the alternating boundary argument -1
_MIN_TERMS_AT_BOUNDARY = 10


def pochhammer(x: float, n: int) -> float:
    """Shifted factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = 1.0
    for k in range(n):
        out *= x + k
    return out


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0 (Lanczos-class via the C library)."""
    if x <= 0:
        raise NonPositiveArgument(f"log_gamma needs x > 0, got {x}")
    return math.lgamma(x)


def _is_nonpositive_integer(d: float) -> bool:
    return d <= 0 and abs(d - round(d)) < 1e-12


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameter bundle for pFq(c_1..c_p; d_1..d_q; z)."""

    numerator_params: Sequence[float]
    denominator_params: Sequence[float]
    argument: complex

    def __post_init__(self) -> None:
        for d in self.denominator_params:
            if _is_nonpositive_integer(d):
                raise BadDenominator(f"denominator parameter {d} is a nonpositive integer")
        if len(self.numerator_params) > len(self.denominator_params) + 1:
            raise DivergentSeries(
                f"p = {len(self.numerator_params)} > q+1 = "
                f"{len(self.denominator_params) + 1}: zero radius of convergence"
            )


@dataclass
class PFQResult:
    value: float
    err_estimate: float
    terms_used: int


def pFq(spec: HypergeometricSpec, tol: float = PFQ_TOL) -> PFQResult:
    """Sum the hypergeometric series; stops when two successive terms are
    each below tol*|partial sum|.

    |z| < 1: geometric decay.  |z| = 1 requires sum(d) - sum(c) > 0, or
    z = -1 with p = q+1 and terms eventually decreasing (alternating bound);
    at -1 at least 10 terms are taken before the stopping rule applies.
    """
    cs = [float(c) for c in spec.numerator_params]
    ds = [float(d) for d in spec.denominator_params]
    z = complex(spec.argument)
    az = abs(z)
    if az > 1.0 + 1e-14:
        raise DivergentSeries(f"|argument| = {az:.6g} > 1")
    alternating_boundary = False
    if abs(az - 1.0) <= 1e-14:
        excess = sum(ds) - sum(cs)
        if excess > 0:
            pass  # absolutely convergent on the circle
        elif z.real < 0 and abs(z.imag) < 1e-14 and len(cs) == len(ds) + 1:
            alternating_boundary = True
        else:
            raise DivergentSeries(
                f"series does not converge at |z| = 1 (parameter excess {excess:.6g})"
            )

    total = complex(1.0)
    term = complex(1.0)
    prev_small = False
    for n in range(PFQ_MAX_TERMS):
        ratio = z / (n + 1.0)
        for c in cs:
            ratio *= c + n
        for d in ds:
            ratio /= d + n
        term = term * ratio
        total += term
        small = abs(term) < tol * max(abs(total), 1e-300)
        if small and prev_small and (not alternating_boundary or n + 1 >= _MIN_TERMS_AT_BOUNDARY):
            err = abs(term)
            val = total.real if abs(total.imag) < 1e-13 * abs(total) else abs(total)
            return PFQResult(float(val), err, n + 2)
        prev_small = small
    raise DivergentSeries(f"pFq did not converge within {PFQ_MAX_TERMS} terms (|z| = {az:.6g})")


def hyp2f1(a: float, b: float, c: float, z: float, tol: float = PFQ_TOL) -> float:
    """Gauss 2F1 convenience wrapper."""
    return pFq(HypergeometricSpec((a, b), (c,), z), tol).value


def alternating_sum(a: Callable[[int], float], n_terms: int = 48) -> float:
    """CVZ-accelerated value of sum_{k>=0} (-1)^k a_k for a_k >= 0 decaying.

    Chebyshev-weighted partial sum; error ~ (3 + sqrt 8)^{-n} for totally
    monotone sequences, so n = 48 is rounding-limited in double precision.
    """
    n = n_terms
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * a(k)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d
