import math

import numpy as np
import pytest

from betastar.errors import NoConvergence
from betastar.quadrature import Integrand, as_vectorized, fixed_nodes, integrate
from betastar.special import log_gamma


def test_constant():
    val, err = integrate(lambda t: np.ones_like(t), 0, 1)
    assert val == pytest.approx(1.0, abs=1e-12)


def test_log_singularity():
    # antiderivative t - t log t
    val, _ = integrate(lambda t: np.log(1.0 / t), 0, 1)
    assert val == pytest.approx(1.0, abs=1e-12)


def test_beta_half_half():
    # both endpoints carry t^(-1/2); the right one resolves only to ~1e-8
    # in doubles (abscissae saturate one ulp below 1)
    val, _ = integrate(lambda t: t**-0.5 * (1 - t) ** -0.5, 0, 1)
    assert val == pytest.approx(math.pi, abs=5e-8)


@pytest.mark.parametrize("b,c", [(1, 3), (0.5, 2), (2, 5)])
def test_beta_function_oracle(b, c):
    val, err = integrate(lambda t: t ** (b - 1.0) * (1 - t) ** (c - b - 1.0), 0, 1)
    expected = math.exp(log_gamma(b) + log_gamma(c - b) - log_gamma(c))
    assert val == pytest.approx(expected, abs=1e-9)
    assert abs(val - expected) <= max(1e-10, err, 1e-12)


def test_linearity():
    f = lambda t: np.sin(3 * t)
    g = lambda t: t**2
    a, b = 2.7, -1.3
    v1, e1 = integrate(lambda t: a * f(t) + b * g(t), 0, 1)
    vf, ef = integrate(f, 0, 1)
    vg, eg = integrate(g, 0, 1)
    assert v1 == pytest.approx(a * vf + b * vg, abs=abs(a) * ef + abs(b) * eg + 1e-12)


def test_interval_additivity():
    tol = 1e-10
    f = lambda t: np.exp(t) * np.cos(5 * t)
    whole, _ = integrate(f, 0, 1, tol)
    left, _ = integrate(f, 0, 0.37, tol)
    right, _ = integrate(f, 0.37, 1, tol)
    assert whole == pytest.approx(left + right, abs=2 * tol)


def test_empty_interval():
    assert integrate(lambda t: t, 0.5, 0.5) == (0.0, 0.0)


def test_bad_bounds():
    with pytest.raises(ValueError):
        integrate(lambda t: t, 0.7, 0.3)
    with pytest.raises(ValueError):
        integrate(lambda t: t, -0.1, 0.5)


def test_non_integrable_raises():
    with pytest.raises(NoConvergence):
        integrate(lambda t: 1.0 / t, 0, 1)


def test_nan_integrand_raises():
    def bad(t):
        out = np.asarray(t).copy()
        out[(out > 0.4) & (out < 0.6)] = np.nan
        return out

    with pytest.raises(NoConvergence):
        integrate(bad, 0, 1)


def test_integrand_wrapper_and_hint():
    f = Integrand(evaluate=lambda t: t**2, singularity_hint="none")
    val, _ = integrate(f, 0, 1)
    assert val == pytest.approx(1 / 3, abs=1e-12)


def test_as_vectorized_scalar_function():
    f = as_vectorized(lambda x: math.sqrt(x))
    val, _ = integrate(f, 0, 1)
    assert val == pytest.approx(2 / 3, abs=1e-10)


def test_fixed_nodes_rule():
    xs, ws = fixed_nodes(0, 1, level=6)
    assert np.all(np.diff(xs) > 0)
    assert float(ws @ np.exp(xs)) == pytest.approx(math.e - 1, abs=1e-12)
    xs2, ws2 = fixed_nodes(0.25, 0.75, level=6)
    assert float(ws2 @ xs2) == pytest.approx((0.75**2 - 0.25**2) / 2, abs=1e-12)


def test_error_estimate_reported():
    val, err = integrate(lambda t: np.sqrt(t), 0, 1, 1e-10)
    assert val == pytest.approx(2 / 3, abs=1e-10)
    assert 0 <= err < 1e-8
