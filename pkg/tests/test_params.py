import math
import warnings

import numpy as np
import pytest

from betastar import ParameterSet, derive_mu_nu, derive_xi, g_series_eval, psi_series
from betastar.errors import ComplexRoots, NegativeRoot, XiOutOfRangeWarning


def test_mu_nu_paper_example():
    assert derive_mu_nu(3, 1) == (1.0, 1.0)


@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 4.0])
def test_mu_nu_gamma_zero(alpha):
    assert derive_mu_nu(alpha, 0) == (0.0, alpha)


@pytest.mark.parametrize("alpha,gamma", [(5, 4), (6, 4), (6, 5), (10, 9)])
def test_mu_nu_complex_roots(alpha, gamma):
    with pytest.raises(ComplexRoots):
        derive_mu_nu(alpha, gamma)


def test_mu_nu_quadratic_formula():
    mu, nu = derive_mu_nu(10, 5)
    assert mu == pytest.approx((5 - math.sqrt(5)) / 2, abs=1e-12)
    assert nu == pytest.approx((5 + math.sqrt(5)) / 2, abs=1e-12)
    assert mu * nu == pytest.approx(5, abs=1e-12)
    assert mu + nu == pytest.approx(5, abs=1e-12)


def test_mu_nu_negative_root():
    with pytest.raises(NegativeRoot):
        derive_mu_nu(-1, 0)
    # alpha - gamma < 0 with real discriminant gives a negative root
    with pytest.raises(NegativeRoot):
        derive_mu_nu(0.5, 2.0)


def test_mu_nu_double_root_noise_guard():
    # discriminant is an exact 0 here; nudge gamma so it lands within -1e-12
    mu, nu = derive_mu_nu(3.0, 1.0 + 1e-16)
    assert mu == pytest.approx(nu, abs=1e-6)


@pytest.mark.parametrize(
    "delta,zeta,expected", [(1, 0, 0.0), (2, 0.75, 0.5), (1, 0.25, 0.25)]
)
def test_xi_examples(delta, zeta, expected):
    assert derive_xi(delta, zeta) == pytest.approx(expected, abs=0)


def test_xi_warns_outside_theorem_range():
    with pytest.warns(XiOutOfRangeWarning):
        derive_xi(3, 0)
    with pytest.warns(XiOutOfRangeWarning):
        derive_xi(1, 0.75)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        derive_xi(1, 0.25)  # in range: no warning


def test_xi_range_follows_zeta_window():
    rng = np.random.RandomState(7)
    for _ in range(200):
        delta = rng.uniform(1, 8)
        zeta = rng.uniform(1 - 1 / delta, 1 - 1 / (2 * delta))
        xi = derive_xi(delta, zeta)
        assert -1e-12 <= xi <= 0.5 + 1e-12


def test_product_and_sum_invariants():
    rng = np.random.RandomState(11)
    for _ in range(300):
        mu = rng.uniform(0, 5)
        nu = rng.uniform(mu, mu + 5)
        alpha = mu + nu + mu * nu
        gamma = mu * nu
        m, n = derive_mu_nu(alpha, gamma)
        assert abs(m * n - gamma) <= 1e-12 * max(1.0, gamma)
        assert abs(m + n - (alpha - gamma)) <= 1e-12 * max(1.0, alpha)
        assert m <= n


def test_create_derives_consistently():
    p = ParameterSet.create(3, 1, 2, 0.75)
    assert (p.mu, p.nu) == (1.0, 1.0)
    assert p.xi == pytest.approx(0.5, abs=0)
    assert not p.is_gamma_zero
    assert ParameterSet.create(2, 0, 1, 0).is_gamma_zero


def test_create_validation():
    with pytest.raises(ValueError):
        ParameterSet.create(1, 0, 1, 1.0)  # zeta = 1
    with pytest.raises(ValueError):
        ParameterSet.create(1, 0, 1, -0.1)
    with pytest.raises(ValueError):
        ParameterSet.create(-1, 0, 1, 0)
    with pytest.raises(ValueError):
        ParameterSet.create(1, 0, 0, 0)  # delta = 0


def test_from_mu_nu_orders_and_rebuilds():
    p = ParameterSet.from_mu_nu(3, 2, 1, 0)
    assert (p.mu, p.nu) == (2.0, 3.0)
    assert p.gamma == pytest.approx(6.0)
    assert p.alpha == pytest.approx(11.0)


def test_root_order_swap_leaves_symmetric_quantities():
    base = ParameterSet.from_mu_nu(2, 3, 1.5, 0.5)
    swapped = ParameterSet(
        alpha=base.alpha, gamma=base.gamma, delta=base.delta, zeta=base.zeta,
        mu=base.nu, nu=base.mu, xi=base.xi,
    )
    a = psi_series(base, 16).coeffs
    b = psi_series(swapped, 16).coeffs
    np.testing.assert_allclose(a, b, rtol=0, atol=1e-15)
    for t in (0.2, 0.7, 1.0):
        assert g_series_eval(base, t) == pytest.approx(g_series_eval(swapped, t), abs=1e-12)
