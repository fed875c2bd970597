"""Numerical certification on disk grids: starlikeness margins, source-class
membership, the third-order corollary functional, and the boundary sharpness
probe at z = -1.

All checks report a signed margin over an explicit grid; nothing here is a
proof, and tolerances state exactly how much slack was allowed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import TailTooLarge
from .params import ParameterSet
from .series import PowerSeries, cauchy_product, eval_series_grid, series_div, series_pow

DEFAULT_RADII_COUNT = 24
DEFAULT_MAX_RADIUS = 0.99
MEMBERSHIP_MAX_RADIUS = 0.9  # class-functional tails explode near the boundary
DEFAULT_ANGLES = 128
INTERIOR_TOL = 1e-6
BOUNDARY_TOL = 1e-3
TAIL_LIMIT = 1e-8


@dataclass(frozen=True)
class VerificationReport:
    quantity: str  # starlike_margin | W_membership | third_order | sharpness
    min_value: float
    argmin_z: complex
    grid_spec: tuple
    passed: bool
    tolerance: float
    diagnostics: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "min_value": self.min_value,
            "argmin_z": [self.argmin_z.real, self.argmin_z.imag],
            "grid_spec": list(self.grid_spec),
            "passed": bool(self.passed),
            "tolerance": self.tolerance,
            "diagnostics": {k: _plain(v) for k, v in self.diagnostics.items()},
        }


def _plain(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, (np.floating, np.integer)):
        return float(v)
    if isinstance(v, (tuple, list)):
        return [_plain(x) for x in v]
    return v


def disk_grid(radii: np.ndarray, angles: int) -> np.ndarray:
    theta = np.arange(angles) * (2.0 * math.pi / angles)
    return (np.asarray(radii)[:, None] * np.exp(1j * theta)[None, :]).ravel()


def default_radii(count: int = DEFAULT_RADII_COUNT, r_max: float = DEFAULT_MAX_RADIUS) -> np.ndarray:
    j = np.arange(1, count + 1)
    x = np.cos((2.0 * j - 1.0) * math.pi / (2.0 * count))
    return r_max * (x[::-1] + 1.0) / 2.0


def starlike_margin(
    G: PowerSeries,
    xi: float,
    radii=None,
    angles: int = DEFAULT_ANGLES,
    tolerance: float = INTERIOR_TOL,
    with_samples: bool = False,
) -> VerificationReport:
    """min over the grid of Re(z G'/G) - xi.

    A vanishing denominator is reported as a failed check with the witness
    rather than raised.  with_samples attaches the full (z, margin) grid to
    diagnostics["samples"] for CSV export.
    """
    if abs(G.coeffs[0]) > 1e-12 or abs(G.coeffs[1] - 1.0) > 1e-12:
        raise ValueError("starlike_margin expects a normalized series (G(0)=0, G'(0)=1)")
    radii = default_radii() if radii is None else np.asarray(radii, dtype=float)
    z = disk_grid(radii, angles)
    gz = eval_series_grid(G, z)
    gdz = eval_series_grid(G.derivative(), z)
    tiny = np.abs(gz) < 1e-14
    if tiny.any():
        zw = complex(z[np.argmax(tiny)])
        return VerificationReport(
            quantity="starlike_margin",
            min_value=-math.inf,
            argmin_z=zw,
            grid_spec=(len(radii), angles),
            passed=False,
            tolerance=tolerance,
            diagnostics={"error": "ZeroDenominator", "witness": zw},
        )
    margins = (z * gdz / gz).real - xi
    idx = int(np.argmin(margins))
    mn = float(margins[idx])
    diagnostics = {}
    if with_samples:
        diagnostics["samples"] = np.column_stack((z.real, z.imag, margins))
    return VerificationReport(
        quantity="starlike_margin",
        min_value=mn,
        argmin_z=complex(z[idx]),
        grid_spec=(len(radii), angles),
        passed=bool(mn >= -tolerance),
        tolerance=tolerance,
        diagnostics=diagnostics,
    )


def w_functional_coeff(u: PowerSeries, p: ParameterSet) -> PowerSeries:
    """Class functional of (f/z)^delta = u by diagonal coefficient algebra:
    coefficient n maps to u_n (d + n mu)(d + n nu) / d^2
    (the monomial shift-and-scale form)."""
    d = p.delta
    n = np.arange(len(u.coeffs), dtype=float)
    return PowerSeries(u.coeffs * (d + n * p.mu) * (d + n * p.nu) / (d * d))


def w_functional_reference(u: PowerSeries, p: ParameterSet) -> PowerSeries:
    """Class functional assembled from its definition via series arithmetic:
    (1 - alpha + 2 gamma) u + (alpha - 3 gamma
        + gamma [(1 - 1/d) zf'/f + (1/d)(1 + zf''/f')]) u zf'/f
    with f = z u^(1/d).  Independent route used to validate the diagonal form.
    """
    d, alpha, gamma = p.delta, p.alpha, p.gamma
    ws = series_pow(u, 1.0 / d)  # w = u^(1/d), f = z w
    # zf'/f = 1 + (1/d) z u'/u
    zu = u.derivative().shift_up().truncate(u.order)
    one = PowerSeries(np.concatenate(([1.0 + 0.0j], np.zeros(u.order, dtype=complex))))
    s = one + series_div(zu, u).scale(1.0 / d)
    # f' and z f'' as plain series in z
    n = np.arange(len(ws.coeffs), dtype=float)
    fprime = PowerSeries(ws.coeffs * (n + 1.0))
    zfpp = PowerSeries(ws.coeffs * (n + 1.0) * n)
    t = series_div(zfpp, fprime)
    bracket = s.scale(gamma * (1.0 - 1.0 / d)) + (one + t).scale(gamma / d)
    coef = bracket + one.scale(alpha - 3.0 * gamma)
    return u.scale(1.0 - alpha + 2.0 * gamma) + cauchy_product(cauchy_product(coef, u), s)


def _tail_estimate(coeffs: np.ndarray, r: float) -> float:
    last = np.abs(coeffs[-8:]).max()
    return last * r ** (len(coeffs)) / (1.0 - r)


def w_membership(
    f_repr: PowerSeries,
    p: ParameterSet,
    beta: float,
    radii=None,
    angles: int = 64,
    phi_grid: int = 360,
    tolerance: float = 0.0,
) -> VerificationReport:
    """Half-plane membership: exists phi with Re e^{i phi} (H(z) - beta) > 0
    on the grid, H evaluated from the diagonal coefficient form.

    The grid realization certifies membership up to grid resolution only;
    the margin at the best phi is what is reported.
    """
    if not beta < 1.0:
        raise ValueError(f"class membership requires beta < 1, got {beta}")
    radii = (
        default_radii(r_max=MEMBERSHIP_MAX_RADIUS) if radii is None else np.asarray(radii, dtype=float)
    )
    h = w_functional_coeff(f_repr, p)
    tail = _tail_estimate(h.coeffs, float(radii.max()))
    if tail > TAIL_LIMIT:
        raise TailTooLarge(
            f"class-functional tail ~ {tail:.3g} at r = {radii.max():.4g} exceeds {TAIL_LIMIT}; "
            f"raise the truncation order"
        )
    z = disk_grid(radii, angles)
    v = eval_series_grid(h, z) - beta
    phis = np.arange(phi_grid) * (2.0 * math.pi / phi_grid)
    # min_z Re(e^{i phi} v) for every phi, then the best phi
    rot = np.exp(1j * phis)[:, None] * v[None, :]
    per_phi_min = rot.real.min(axis=1)
    best = int(np.argmax(per_phi_min))
    margin = float(per_phi_min[best])
    zidx = int(np.argmin((rot.real)[best]))
    return VerificationReport(
        quantity="W_membership",
        min_value=margin,
        argmin_z=complex(z[zidx]),
        grid_spec=(len(radii), angles, phi_grid),
        passed=bool(margin > tolerance),
        tolerance=tolerance,
        diagnostics={"best_phi": float(phis[best]), "tail_estimate": tail},
    )


def third_order_functional(
    Fcal: PowerSeries,
    p: ParameterSet,
    beta: float,
    radii=None,
    angles: int = DEFAULT_ANGLES,
    tolerance: float = INTERIOR_TOL,
) -> VerificationReport:
    """Corollary functional for the unweighted transform:
    Re( u' + (1/d)(alpha - gamma(1 - 1/d)) z u'' + (gamma/d^2) z^2 u''' ) - beta
    with u = z (Fcal/z)^delta; reports the grid minimum."""
    if Fcal.order < 16:
        raise ValueError("third_order_functional needs a series of order >= 16")
    if abs(Fcal.coeffs[0]) > 1e-12 or abs(Fcal.coeffs[1] - 1.0) > 1e-12:
        raise ValueError("expects a normalized function series (F(0)=0, F'(0)=1)")
    d, alpha, gamma = p.delta, p.alpha, p.gamma
    over_z = PowerSeries(Fcal.coeffs[1:])  # Fcal/z
    u = series_pow(over_z, d).shift_up()
    u1 = u.derivative()
    u2 = u1.derivative()
    u3 = u2.derivative()
    x = (
        u1
        + u2.shift_up().scale((alpha - gamma * (1.0 - 1.0 / d)) / d)
        + u3.shift_up().shift_up().scale(gamma / (d * d))
    )
    radii = default_radii() if radii is None else np.asarray(radii, dtype=float)
    z = disk_grid(radii, angles)
    vals = eval_series_grid(x, z).real - beta
    idx = int(np.argmin(vals))
    mn = float(vals[idx])
    return VerificationReport(
        quantity="third_order",
        min_value=mn,
        argmin_z=complex(z[idx]),
        grid_spec=(len(radii), angles),
        passed=bool(mn >= -tolerance),
        tolerance=tolerance,
    )


def sharpness_probe(
    G: PowerSeries,
    xi: float,
    radii_to_one=(0.9, 0.99, 0.999),
) -> VerificationReport:
    """Boundary identity probe: R(r) = |z G'(z) - xi G(z)| at z = -r must
    decrease along the radius list and end below 10 (1 - r_final).

    min_value folds both conditions: min of the final slack and of the
    consecutive decrements, so passed iff min_value >= 0.
    """
    rs = np.asarray(radii_to_one, dtype=float)
    if np.any(np.diff(rs) <= 0) or np.any(rs >= 1.0):
        raise ValueError("radii_to_one must increase strictly toward 1")
    z = -rs.astype(complex)
    vals = np.abs(z * eval_series_grid(G.derivative(), z) - xi * eval_series_grid(G, z))
    slack = 10.0 * (1.0 - rs[-1]) - vals[-1]
    decrements = -np.diff(vals)
    mn = float(min(slack, decrements.min() if len(decrements) else slack))
    return VerificationReport(
        quantity="sharpness",
        min_value=mn,
        argmin_z=complex(z[-1]),
        grid_spec=(len(rs),),
        passed=bool(mn >= 0.0),
        tolerance=0.0,
        diagnostics={"residuals": vals, "radii": rs},
    )
