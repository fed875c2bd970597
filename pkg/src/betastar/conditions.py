"""Admissibility and sufficiency checks.

Four families:
  * the decreasing-kernel test  k(t) = t^(d/mu - 1) Pi(t) / ((1+t)(1-t)^(1+2 xi))
    evaluated by grid differences,
  * the differential bound on t lambda'(t)/lambda(t),
  * per-operator parameter tables (pure arithmetic, zero tolerance),
  * the duality functional N over (z, epsilon) grids, realized on a frozen
    tanh-sinh node set so the whole grid reduces to dot products against a
    cached t-profile.

Exponent bookkeeping: 3 - 2 delta (1 - zeta) = 1 + 2 xi, so both forms of
the decreasing condition are the same test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import quadrature
from .errors import NotCovered, PreconditionViolated, UnknownOperator
from .params import ParameterSet
from .weights import CumulativeTables, Weight, pi_cap

GRID_EPS = 1e-4
MONOTONE_TOL = 1e-9
N_TOL = 1e-6
_N_NODE_LEVEL = 6
_N_T_MIN = 1e-30  # the N integrand vanishes linearly at 0; mass below is negligible
_N_T_MAX = 1.0 - 1e-15


@dataclass(frozen=True)
class ConditionReport:
    theorem_id: str
    passed: bool
    margin: float  # signed slack, negative = violated
    witness: object = None
    diagnostics: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "passed": bool(self.passed),
            "margin": self.margin,
            "witness": _jsonable(self.witness),
            "diagnostics": {k: _jsonable(v) for k, v in self.diagnostics.items()},
        }


def _jsonable(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (np.floating, np.integer)):
        return float(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


def chebyshev_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """Ascending Chebyshev-spaced points strictly inside (lo, hi)."""
    j = np.arange(1, n + 1)
    x = np.cos((2.0 * j - 1.0) * math.pi / (2.0 * n))  # descending in (-1, 1)
    return lo + (hi - lo) * (x[::-1] + 1.0) / 2.0


def _m_exponent_param(p: ParameterSet) -> float:
    # gamma = 0 replaces mu by alpha throughout (Pi = Lambda_alpha there)
    return p.nu if p.is_gamma_zero else p.mu


def check_monotone_T33(w: Weight, p: ParameterSet, grid_size: int = 2001) -> ConditionReport:
    """Grid test that k(t) is decreasing on (0, 1)."""
    m = _m_exponent_param(p)
    if m <= 0:
        raise PreconditionViolated("monotone check needs mu > 0 (alpha > 0 when gamma = 0)")
    grid = chebyshev_grid(GRID_EPS, 1.0 - GRID_EPS, grid_size)
    tables = CumulativeTables.build(w, p, grid)
    expo = p.delta / m - 1.0
    k = grid**expo * tables.pi_values / ((1.0 + grid) * (1.0 - grid) ** (1.0 + 2.0 * p.xi))
    diffs = np.diff(k)
    scale = float(np.max(np.abs(k)))
    worst = float(np.max(diffs))
    margin = -worst / scale if scale > 0 else 0.0
    passed = worst <= MONOTONE_TOL * scale
    idx = int(np.argmax(diffs))
    return ConditionReport(
        theorem_id="T3_3_monotone",
        passed=passed,
        margin=margin,
        witness=float(grid[idx]),
        diagnostics={"scale": scale, "grid_size": grid_size, "worst_increase": worst},
    )


def check_differential_bound(w: Weight, p: ParameterSet, grid_size: int = 2001) -> ConditionReport:
    """sup over a grid of t lambda'/lambda against the sufficiency bound
    5 - d/mu - d/nu (gamma > 0) or 3 - d/alpha (gamma = 0, xi = 0)."""
    if p.delta < 1.0:
        raise PreconditionViolated(f"need delta >= 1, got delta = {p.delta}")
    if p.is_gamma_zero:
        if p.xi > 1e-12:
            raise NotCovered("no gamma = 0 sufficient bound is stated for xi > 0")
        alpha = p.nu
        if alpha <= 0:
            raise PreconditionViolated("need alpha > 0")
        if not (alpha <= p.delta / 3.0 + 1e-12 or alpha >= p.delta - 1e-12):
            raise PreconditionViolated(
                f"need alpha in (0, delta/3] or [delta, inf), got alpha = {alpha}, delta = {p.delta}"
            )
        bound = 3.0 - p.delta / alpha
        theorem_id = "T4_2_gamma_zero"
    else:
        if p.delta > min(p.mu, p.nu) + 1e-12:
            raise PreconditionViolated(
                f"need delta <= min(mu, nu), got delta = {p.delta}, (mu, nu) = ({p.mu}, {p.nu})"
            )
        bound = 5.0 - p.delta / p.mu - p.delta / p.nu
        theorem_id = "T4_1_gamma_pos"

    t = np.linspace(GRID_EPS, 1.0 - GRID_EPS, grid_size)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = t * w.derivative(t) / w.value(t)
    sup = float(np.max(ratio))
    margin = bound - sup
    idx = int(np.argmax(ratio))
    return ConditionReport(
        theorem_id=theorem_id,
        passed=bool(margin >= -1e-12 and math.isfinite(sup)),
        margin=margin if math.isfinite(margin) else -math.inf,
        witness=float(t[idx]),
        diagnostics={"bound": bound, "sup": sup},
    )


# --------------------------------------------------------------------------
# Operator parameter tables
# --------------------------------------------------------------------------

def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionViolated(msg)


def _gamma_pos_bound(p: ParameterSet) -> float:
    _require(p.delta >= 1.0, f"need delta >= 1, got {p.delta}")
    _require(
        p.delta <= min(p.mu, p.nu) + 1e-12,
        f"need delta <= min(mu, nu), got delta = {p.delta}, (mu, nu) = ({p.mu}, {p.nu})",
    )
    return 5.0 - p.delta / p.mu - p.delta / p.nu


def _gamma_zero_alpha(p: ParameterSet) -> float:
    alpha = p.nu
    _require(p.delta >= 1.0, f"need delta >= 1, got {p.delta}")
    _require(alpha >= p.delta - 1e-12, f"need alpha >= delta, got alpha = {alpha}, delta = {p.delta}")
    return alpha


def check_operator_bounds(kind: str, params: dict, p: ParameterSet) -> ConditionReport:
    """Pure-arithmetic slack of the per-operator sufficiency inequalities.

    margin is the minimum slack over the branch's inequalities; passed means
    margin >= 0 exactly.  Raises PreconditionViolated when the branch's side
    condition on (delta, mu, nu, alpha) fails, NotCovered for the bernardi
    gamma = 0 row with xi > 0, UnknownOperator for kinds without a table.
    """
    if kind == "uniform":
        kind, params = "bernardi", {"c": 0.0}
    handler = _OP_TABLES.get(kind)
    if handler is None:
        raise UnknownOperator(f"no parameter table for weight kind {kind!r}")
    branch = "gamma_zero" if p.is_gamma_zero else "gamma_pos"
    margin, detail = handler(params, p)
    idx = int(np.argmin([s for s, _ in detail]))
    return ConditionReport(
        theorem_id=f"op_bound:{kind}",
        passed=bool(margin >= 0.0),
        margin=margin,
        witness=detail[idx][1],
        diagnostics={"branch": branch, "slacks": {name: s for s, name in detail}},
    )


def _slacks(*pairs) -> tuple[float, list]:
    detail = [(float(s), name) for s, name in pairs]
    return min(s for s, _ in detail), detail


def _op_bernardi(params: dict, p: ParameterSet):
    c = params["c"]
    if p.is_gamma_zero:
        if p.xi > 1e-12:
            raise NotCovered("bernardi gamma = 0 row is stated for xi = 0 only")
        alpha = p.nu
        _require(p.delta >= 1.0, f"need delta >= 1, got {p.delta}")
        _require(
            alpha <= p.delta / 3.0 + 1e-12 or alpha >= p.delta - 1e-12,
            f"need alpha in (0, delta/3] or [delta, inf), got alpha = {alpha}",
        )
        return _slacks((3.0 - p.delta / alpha - c, "c <= 3 - delta/alpha"))
    bound = _gamma_pos_bound(p)
    return _slacks((bound - c, "c <= 5 - delta/mu - delta/nu"))


def _op_komatu(params: dict, p: ParameterSet):
    k, q = params["k"], params["p"]
    if p.is_gamma_zero:
        _gamma_zero_alpha(p)
        return _slacks((q - 2.0, "p >= 2"), (-k, "k <= 0"), (k + 1.0, "k > -1"))
    bound = _gamma_pos_bound(p)
    return _slacks((q - 1.0, "p >= 1"), (bound - k, "k <= 5 - delta/mu - delta/nu"), (k + 1.0, "k > -1"))


def _op_hohlov(params: dict, p: ParameterSet):
    a, b, c = params["a"], params["b"], params["c"]
    if p.is_gamma_zero:
        _gamma_zero_alpha(p)
        return _slacks((c - a - b - 1.0, "c - a - b >= 1"), (1.0 - b, "b <= 1"), (b, "b > 0"))
    bound = _gamma_pos_bound(p) + 1.0  # b <= 6 - delta/mu - delta/nu
    return _slacks((c - a - b, "c - a - b >= 0"), (bound - b, "b <= 6 - delta/mu - delta/nu"), (b, "b > 0"))


def _op_carlson_shaffer(params: dict, p: ParameterSet):
    b, c = params["b"], params["c"]
    if p.is_gamma_zero:
        _gamma_zero_alpha(p)
        return _slacks((c - b - 2.0, "c - b >= 2"), (1.0 - b, "b <= 1"), (b, "b > 0"))
    bound = _gamma_pos_bound(p) + 1.0
    return _slacks((c - b - 1.0, "c - b >= 1"), (bound - b, "b <= 6 - delta/mu - delta/nu"), (b, "b > 0"))


def _op_two_param(params: dict, p: ParameterSet):
    lo, hi = sorted((params["a"], params["b"]))
    equal = abs(hi - lo) < 1e-9
    if p.is_gamma_zero:
        _gamma_zero_alpha(p)
        if equal:
            return _slacks((-lo, "a = b <= 0"), (lo + 1.0, "a > -1"))
        return _slacks((lo + 1.0, "min(a, b) > -1"))
    bound = _gamma_pos_bound(p)
    if equal:
        return _slacks((bound - lo, "a = b <= 5 - delta/mu - delta/nu"), (lo + 1.0, "a > -1"))
    return _slacks((lo, "min(a, b) >= 0"), (bound - lo, "min(a, b) <= 5 - delta/mu - delta/nu"))


def _op_ali_singh(params: dict, p: ParameterSet):
    k = params["k"]
    if p.is_gamma_zero:
        alpha = p.nu
        _require(p.delta >= 1.0, f"need delta >= 1, got {p.delta}")
        _require(alpha >= p.delta - 1e-12, f"need 1 <= delta <= alpha, got alpha = {alpha}")
        if k < 2.0 / 3.0:
            slack = k - 2.0 / 3.0
        elif k <= 1.0:
            slack = min(k - 2.0 / 3.0, 1.0 - k)
        elif k < 3.0:
            slack = -min(k - 1.0, 3.0 - k)
        else:
            slack = k - 3.0
        return _slacks((slack, "k in [2/3, 1] or [3, inf)"))
    _gamma_pos_bound(p)
    return _slacks((k, "k >= 0"))


_OP_TABLES = {
    "bernardi": _op_bernardi,
    "komatu": _op_komatu,
    "hohlov": _op_hohlov,
    "carlson_shaffer": _op_carlson_shaffer,
    "two_param": _op_two_param,
    "ali_singh": _op_ali_singh,
}


# --------------------------------------------------------------------------
# The duality functional N over (z, epsilon)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class HxiEvaluator:
    """Extremal test function h(z) = z (1 + c z)/(1-z)^2, c = (eps + 2 xi - 1)/(2(1-xi))."""

    xi: float
    epsilon: complex

    def __post_init__(self) -> None:
        if abs(abs(self.epsilon) - 1.0) > 1e-12:
            raise ValueError(f"|epsilon| must be 1, got {abs(self.epsilon)}")

    @property
    def coefficient(self) -> complex:
        return (self.epsilon + 2.0 * self.xi - 1.0) / (2.0 * (1.0 - self.xi))

    def ratio(self, w):
        """h(w)/w, with the removable value 1 at w = 0."""
        return (1.0 + self.coefficient * w) / (1.0 - w) ** 2

    def value(self, w):
        return w * self.ratio(w)


@lru_cache(maxsize=32)
def _n_profile(w: Weight, p: ParameterSet) -> tuple:
    """Frozen nodes with cached t-profile of the N integrand.

    Returns (t, wm, c0): abscissae, weight * t^(d/m - 1) * Pi(t), and the
    z-independent subtrahend (1 - xi(1+t)) / ((1-xi)(1+t)^2).
    """
    m = _m_exponent_param(p)
    if m <= 0:
        raise PreconditionViolated("N functional needs mu > 0 (alpha > 0 when gamma = 0)")
    t, wts = quadrature.fixed_nodes(0.0, 1.0, _N_NODE_LEVEL)
    keep = (t >= _N_T_MIN) & (t <= _N_T_MAX)
    t, wts = t[keep], wts[keep]
    expo = p.delta / m - 1.0
    cap = np.array([pi_cap(w, p, float(ti)) for ti in t])
    wm = wts * t**expo * cap
    c0 = (1.0 - p.xi * (1.0 + t)) / ((1.0 - p.xi) * (1.0 + t) ** 2)
    return t, wm, c0


def _n_value(profile: tuple, xi: float, z: complex, epsilon: complex) -> float:
    t, wm, c0 = profile
    w = t * z
    inv = 1.0 / (1.0 - w) ** 2
    b = w * inv
    q0 = (2.0 * xi - 1.0) / (2.0 * (1.0 - xi))
    rho = inv.real + q0 * b.real + (epsilon * b).real / (2.0 * (1.0 - xi)) - c0
    return float(np.dot(wm, rho))


def eval_N_functional(w: Weight, p: ParameterSet, z: complex, epsilon: complex) -> float:
    """int_0^1 t^(d/m-1) Pi(t) (Re h_xi(tz)/(tz) - (1-xi(1+t))/((1-xi)(1+t)^2)) dt."""
    if abs(z) >= 1.0:
        raise ValueError(f"need |z| < 1, got {abs(z)}")
    HxiEvaluator(p.xi, complex(epsilon))  # validates |epsilon| = 1
    return _n_value(_n_profile(w, p), p.xi, complex(z), complex(epsilon))


def default_radial_grid(count: int = 24, r_max: float = 0.995) -> np.ndarray:
    return chebyshev_grid(0.0, r_max, count)


def minimize_N(
    w: Weight,
    p: ParameterSet,
    radial_grid=None,
    angular_grid=None,
    epsilon_grid=None,
) -> ConditionReport:
    """Grid minimum of the N functional over z = r e^{i theta} and epsilon.

    Defaults: 24 Chebyshev radii up to 0.995, 64 angles, 16 epsilon angles.
    passed requires min >= -1e-6; the witness is the attaining (z, epsilon).
    """
    radii = default_radial_grid() if radial_grid is None else np.asarray(radial_grid, dtype=float)
    if angular_grid is None:
        angular_grid = 64
    if isinstance(angular_grid, (int, np.integer)):
        angles = np.arange(angular_grid) * (2.0 * math.pi / angular_grid)
    else:
        angles = np.asarray(angular_grid, dtype=float)
    if epsilon_grid is None:
        epsilon_grid = 16
    if isinstance(epsilon_grid, (int, np.integer)):
        eps_angles = np.arange(epsilon_grid) * (2.0 * math.pi / epsilon_grid)
        eps_values = np.exp(1j * eps_angles)
    else:
        eps_values = np.asarray(epsilon_grid, dtype=complex)
    if len(radii) == 0 or len(angles) == 0 or len(eps_values) == 0:
        raise ValueError("grids must be nonempty")
    if np.any(radii >= 1.0):
        raise ValueError("radii must be < 1")

    profile = _n_profile(w, p)
    best = math.inf
    witness = None
    for r in radii:
        for th in angles:
            z = complex(r * math.cos(th), r * math.sin(th))
            for eps in eps_values:
                val = _n_value(profile, p.xi, z, complex(eps))
                if val < best:
                    best = val
                    witness = (z, complex(eps))
    return ConditionReport(
        theorem_id="N_functional",
        passed=bool(best >= -N_TOL),
        margin=best,
        witness=witness,
        diagnostics={
            "grid": (len(radii), len(angles), len(eps_values)),
            "nodes": len(profile[0]),
        },
    )
