import math

import numpy as np
import pytest

from betastar.errors import BadDenominator, DivergentSeries, NonPositiveArgument
from betastar.special import (
    HypergeometricSpec,
    alternating_sum,
    hyp2f1,
    log_gamma,
    pFq,
    pochhammer,
)


def test_pochhammer_values():
    assert pochhammer(3, 4) == 360
    assert pochhammer(7.3, 0) == 1.0
    for n in range(1, 8):
        assert pochhammer(1, n) == math.factorial(n)


def test_pochhammer_addition_identity():
    rng = np.random.RandomState(3)
    for _ in range(100):
        x = rng.uniform(-5, 5)
        m = rng.randint(0, 10)
        n = rng.randint(0, 10)
        lhs = pochhammer(x, m + n)
        rhs = pochhammer(x, m) * pochhammer(x + m, n)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


def test_2f1_log_oracle():
    # 2F1(1,1;2;z) = -log(1-z)/z
    assert hyp2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), abs=1e-9)
    for z in (0.1, 0.3, 0.7, -0.4):
        assert hyp2f1(1, 1, 2, z) == pytest.approx(-math.log(1 - z) / z, abs=1e-10)


def test_pfq_at_zero_is_one():
    assert pFq(HypergeometricSpec((1.5, 2.2), (3.3,), 0.0)).value == 1.0
    assert pFq(HypergeometricSpec((1, 2, 3, 4), (5, 6, 7), 0.0)).value == 1.0


def test_4f3_reduces_to_log2():
    # matched pairs collapse to 2F1(1,1;2;-1) = log 2; terms decay like 1/n,
    # so accuracy is set by the tolerance via the alternating bound
    res = pFq(HypergeometricSpec((1, 2, 1, 1), (1, 2, 2), -1.0), tol=2e-5)
    assert res.value == pytest.approx(math.log(2), abs=5e-5)
    assert res.err_estimate < 5e-5


def test_matched_pair_reduction():
    rng = np.random.RandomState(5)
    for _ in range(20):
        a, b, c = rng.uniform(0.5, 3, 3)
        d, e = rng.uniform(1.0, 4, 2)
        shared = rng.uniform(0.5, 4)
        z = rng.uniform(-0.8, 0.8)
        full = pFq(HypergeometricSpec((a, b, c, shared), (d, e, shared), z)).value
        reduced = pFq(HypergeometricSpec((a, b, c), (d, e), z)).value
        assert full == pytest.approx(reduced, abs=1e-10 * max(1, abs(full)))


def test_gamma_recurrence():
    for x in np.linspace(0.1, 20, 57):
        assert math.exp(log_gamma(x + 1) - log_gamma(x)) == pytest.approx(x, rel=1e-10)


def test_log_gamma_values():
    assert log_gamma(1) == 0.0
    assert log_gamma(5) == pytest.approx(math.log(24), abs=1e-12)
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-12)
    assert math.exp(log_gamma(0.5)) ** 2 == pytest.approx(math.pi, rel=1e-12)


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(NonPositiveArgument):
        log_gamma(0.0)
    with pytest.raises(NonPositiveArgument):
        log_gamma(-2.5)


def test_bad_denominator():
    with pytest.raises(BadDenominator):
        HypergeometricSpec((1,), (0,), 0.5)
    with pytest.raises(BadDenominator):
        HypergeometricSpec((1,), (-3,), 0.5)
    HypergeometricSpec((1,), (-2.5,), 0.5)  # non-integer negatives allowed


def test_divergence_guards():
    with pytest.raises(DivergentSeries):
        HypergeometricSpec((1, 1, 1), (2,), 0.5)  # p > q + 1
    with pytest.raises(DivergentSeries):
        pFq(HypergeometricSpec((2, 2), (1,), 1.0))  # excess <= 0 at z = 1
    with pytest.raises(DivergentSeries):
        pFq(HypergeometricSpec((1,), (), 1.5))  # |z| > 1


def test_alternating_sum_accelerator():
    log2 = alternating_sum(lambda k: 1.0 / (k + 1.0))
    assert log2 == pytest.approx(math.log(2), abs=1e-13)
    pi4 = alternating_sum(lambda k: 1.0 / (2.0 * k + 1.0))
    assert pi4 == pytest.approx(math.pi / 4, abs=1e-13)


def test_alternating_sum_vs_mpmath():
    mp = pytest.importorskip("mpmath")
    # a slowly decaying alternating series with non-rational terms
    term = lambda k: 1.0 / math.sqrt(k + 1.0)
    ours = alternating_sum(term)
    ref = float(mp.nsum(lambda k: (-1) ** k / mp.sqrt(k + 1), [0, mp.inf]))
    assert ours == pytest.approx(ref, abs=1e-12)
