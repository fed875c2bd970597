import math

import numpy as np
import pytest

from betastar.errors import NonUnitConstantTerm, NonZeroConstantTerm, ZeroDenominator
from betastar.series import (
    PowerSeries,
    cauchy_product,
    eval_series,
    eval_series_grid,
    geometric,
    hadamard,
    log_derivative_fraction,
    series_div,
    series_exp,
    series_log,
    series_pow,
)
from conftest import random_series


def S(*coeffs):
    return PowerSeries(np.asarray(coeffs, dtype=complex))


def test_hadamard_examples():
    out = hadamard(S(1, 1, 1), S(1, 2, 3))
    np.testing.assert_array_equal(out.coeffs, np.asarray([1, 2, 3], dtype=complex))
    s = random_series(1, 12)
    np.testing.assert_array_equal(hadamard(s, geometric(12)).coeffs, s.coeffs)
    koebe = PowerSeries(np.arange(6, dtype=complex))
    recip = PowerSeries((1.0 / np.arange(1, 7)).astype(complex))
    out = hadamard(koebe, recip)
    expected = np.array([n / (n + 1.0) for n in range(6)], dtype=complex)
    np.testing.assert_allclose(out.coeffs, expected, atol=1e-15)


def test_hadamard_commutative_associative():
    a, b, c = random_series(2, 20), random_series(3, 20), random_series(4, 20)
    np.testing.assert_array_equal(hadamard(a, b).coeffs, hadamard(b, a).coeffs)
    np.testing.assert_allclose(
        hadamard(hadamard(a, b), c).coeffs, hadamard(a, hadamard(b, c)).coeffs, atol=1e-15
    )


def test_log_examples():
    out = series_log(S(1, 1, 0, 0, 0))
    np.testing.assert_allclose(
        out.coeffs, [0, 1, -0.5, 1 / 3, -0.25], atol=1e-15
    )
    np.testing.assert_array_equal(series_log(S(1)).coeffs, [0])
    out = series_log(geometric(6))  # log(1/(1-z)) = sum z^n/n
    np.testing.assert_allclose(out.coeffs[1:], 1.0 / np.arange(1, 7), atol=1e-14)


def test_exp_examples():
    out = series_exp(S(0, 1, 0, 0))
    np.testing.assert_allclose(out.coeffs, [1, 1, 0.5, 1 / 6], atol=1e-15)
    np.testing.assert_array_equal(series_exp(S(0, 0, 0)).coeffs, [1, 0, 0])


def test_log_exp_round_trips():
    for seed in range(20):
        s = random_series(seed)
        back = series_exp(series_log(s))
        np.testing.assert_allclose(back.coeffs, s.coeffs, atol=1e-12)
        t = PowerSeries(np.concatenate(([0.0], s.coeffs[1:])))
        back2 = series_log(series_exp(t))
        np.testing.assert_allclose(back2.coeffs, t.coeffs, atol=1e-12)


def test_pow_examples():
    out = series_pow(S(1, 1, 0), 2.0)
    np.testing.assert_allclose(out.coeffs, [1, 2, 1], atol=1e-14)
    s = random_series(9, 24)
    np.testing.assert_allclose(series_pow(s, 1.0).coeffs, s.coeffs, atol=1e-13)
    half = series_pow(S(1, 1, 0, 0, 0, 0), 0.5)
    np.testing.assert_allclose(series_pow(half, 2.0).coeffs[:2], [1, 1], atol=1e-12)
    np.testing.assert_allclose(series_pow(half, 2.0).coeffs[2:], 0, atol=1e-12)


def test_pow_additivity_vs_cauchy():
    s = random_series(13, 32, decay=0.4)
    a, b = 0.7, 1.9
    lhs = series_pow(s, a + b)
    rhs = cauchy_product(series_pow(s, a), series_pow(s, b))
    np.testing.assert_allclose(lhs.coeffs, rhs.coeffs, atol=1e-10)


def test_eval_examples():
    g = geometric(15)
    assert eval_series(g, 0.5) == pytest.approx(2 * (1 - 0.5**16), abs=1e-12)
    s = random_series(5)
    assert eval_series(s, 0.0) == s.coeffs[0]
    koebe = PowerSeries(np.arange(51, dtype=complex))
    assert eval_series(koebe, -0.5) == pytest.approx(-0.5 / 1.5**2, abs=1e-12)


def test_eval_grid_matches_scalar():
    s = random_series(8, 40)
    zs = np.array([0.3 + 0.1j, -0.5j, 0.9])
    np.testing.assert_allclose(
        eval_series_grid(s, zs), [eval_series(s, z) for z in zs], atol=1e-14
    )


def test_log_derivative_examples():
    ident = S(0, 1)
    for z in (0.3, -0.5 + 0.2j):
        assert log_derivative_fraction(ident, z) == pytest.approx(1.0, abs=1e-14)
    koebe = PowerSeries(np.arange(201, dtype=complex))
    assert log_derivative_fraction(koebe, 0.5) == pytest.approx(3.0, abs=1e-10)
    zgeo = geometric(200).shift_up()  # z/(1-z)
    assert log_derivative_fraction(zgeo, 0.5) == pytest.approx(2.0, abs=1e-10)


def test_log_derivative_zero_denominator():
    with pytest.raises(ZeroDenominator):
        log_derivative_fraction(S(1, -2), 0.5)


def test_derivative_matches_finite_difference():
    s = random_series(21, 48)
    h = 1e-5
    for z in (0.2, 0.5 + 0.3j, -0.6):
        fd = (eval_series(s, z + h) - eval_series(s, z - h)) / (2 * h)
        exact = eval_series(s.derivative(), z)
        assert abs(exact - fd) <= 1e-6


def test_constant_term_guards():
    with pytest.raises(NonUnitConstantTerm):
        series_log(S(2, 1))
    with pytest.raises(NonUnitConstantTerm):
        series_pow(S(0.5, 1), 2.0)
    with pytest.raises(NonZeroConstantTerm):
        series_exp(S(1, 1))


def test_division_and_product_consistency():
    a, b = random_series(31, 30), random_series(32, 30)
    q = series_div(a, b)
    np.testing.assert_allclose(cauchy_product(q, b).coeffs, a.coeffs, atol=1e-10)


def test_rejects_non_finite_coefficients():
    with pytest.raises(ValueError):
        PowerSeries(np.array([1.0, np.nan]))
    with pytest.raises(ValueError):
        PowerSeries(np.array([1.0, np.inf]))
