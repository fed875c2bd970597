"""Scalar problem parameters and their derived quantities.

The transform's dial is (alpha, gamma, delta, zeta).  From it we derive the
factorization pair (mu, nu) — the roots of x^2 - (alpha-gamma)x + gamma = 0,
so mu*nu = gamma and mu + nu = alpha - gamma — and the shifted order
xi = 1 - delta + delta*zeta.  The sufficiency theorems operate in the regime
delta >= 1, xi in [0, 1/2]; leaving it triggers a warning, not an error.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import ComplexRoots, NegativeRoot, XiOutOfRangeWarning

# Discriminants in (-DISC_TOL, 0) are treated as a double root (float noise at mu=nu).
DISC_TOL = 1e-12


def derive_mu_nu(alpha: float, gamma: float) -> tuple[float, float]:
    """Roots (mu, nu), mu <= nu, of x^2 - (alpha-gamma)x + gamma = 0.

    gamma = 0 short-circuits to (0, alpha) exactly.  Raises ComplexRoots when
    the discriminant is negative (no real factorization exists for these
    parameters) and NegativeRoot when a root falls below zero.
    """
    if gamma == 0.0:
        if alpha < 0:
            raise NegativeRoot(f"nu = alpha = {alpha} < 0")
        return 0.0, float(alpha)
    s = alpha - gamma
    disc = s * s - 4.0 * gamma
    if disc < 0.0:
        if disc > -DISC_TOL:
            disc = 0.0
        else:
            raise ComplexRoots(
                f"(alpha-gamma)^2 - 4*gamma = {disc:.6g} < 0 for alpha={alpha}, gamma={gamma}"
            )
    root = math.sqrt(disc)
    mu = (s - root) / 2.0
    nu = (s + root) / 2.0
    if mu < 0.0 or nu < 0.0:
        raise NegativeRoot(f"roots ({mu:.6g}, {nu:.6g}) not both nonnegative")
    return mu, nu


def derive_xi(delta: float, zeta: float) -> float:
    """xi = 1 - delta + delta*zeta; warns when outside [0, 1/2]."""
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    xi = 1.0 - delta + delta * zeta
    if not 0.0 <= xi <= 0.5:
        warnings.warn(
            f"xi = {xi:.6g} outside [0, 1/2]; sufficiency theorems need "
            f"zeta in [1 - 1/delta, 1 - 1/(2*delta)]",
            XiOutOfRangeWarning,
            stacklevel=2,
        )
    return xi


@dataclass(frozen=True)
class ParameterSet:
    """Validated parameter bundle with derived (mu, nu, xi).

    Construct through :meth:`create` (from alpha/gamma) or
    :meth:`from_mu_nu` (from a factorization pair); both enforce the
    invariants mu*nu = gamma, mu + nu = alpha - gamma, xi = 1 - delta*(1-zeta).
    """

    alpha: float
    gamma: float
    delta: float
    zeta: float
    mu: float
    nu: float
    xi: float

    @classmethod
    def create(cls, alpha: float, gamma: float, delta: float, zeta: float) -> "ParameterSet":
        if not 0.0 <= zeta < 1.0:
            raise ValueError(f"zeta must be in [0, 1), got {zeta}")
        if alpha < 0 or gamma < 0:
            raise ValueError(f"alpha and gamma must be nonnegative, got ({alpha}, {gamma})")
        mu, nu = derive_mu_nu(alpha, gamma)
        xi = derive_xi(delta, zeta)
        return cls(float(alpha), float(gamma), float(delta), float(zeta), mu, nu, xi)

    @classmethod
    def from_mu_nu(cls, mu: float, nu: float, delta: float, zeta: float) -> "ParameterSet":
        """Build from the factorization pair directly (test/diagnostic helper)."""
        if mu < 0 or nu < 0:
            raise NegativeRoot(f"mu, nu must be nonnegative, got ({mu}, {nu})")
        if mu > nu:
            mu, nu = nu, mu
        alpha = mu + nu + mu * nu
        gamma = mu * nu
        xi = derive_xi(delta, zeta)
        return cls(float(alpha), float(gamma), float(delta), float(zeta), float(mu), float(nu), xi)

    @property
    def is_gamma_zero(self) -> bool:
        return self.gamma == 0.0

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "gamma": self.gamma,
            "delta": self.delta,
            "zeta": self.zeta,
            "mu": self.mu,
            "nu": self.nu,
            "xi": self.xi,
        }
