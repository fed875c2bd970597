import numpy as np
import pytest

from betastar import ParameterSet, PowerSeries

_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def random_series(seed: int, order: int = 64, decay: float = 0.5) -> PowerSeries:
    """Unit-constant series with coefficients bounded by 1 and a geometric
    envelope (decay^n), keeping log/exp round-trips well-conditioned."""
    rng = np.random.RandomState(seed)
    n = np.arange(order + 1)
    env = decay**n
    coeffs = (rng.uniform(-1, 1, order + 1) + 1j * rng.uniform(-1, 1, order + 1)) * env
    coeffs[0] = 1.0
    return PowerSeries(coeffs)


def params_from_mu_nu_xi(mu: float, nu: float, delta: float, xi: float) -> ParameterSet:
    """Build a ParameterSet from (mu, nu, delta, xi) with zeta recomputed."""
    zeta = (xi - 1.0 + delta) / delta
    return ParameterSet.from_mu_nu(mu, nu, delta, zeta)


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _ACCEPTANCE_RESULTS.append((name, report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in _ACCEPTANCE_RESULTS:
        status = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
