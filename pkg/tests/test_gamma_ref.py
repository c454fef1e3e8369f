import math
import threading

import mpmath
import numpy as np
import pytest

from bigamma.errors import DomainError, RangeError
from bigamma.gamma_ref import (
    DERIV_CAP,
    DerivTable,
    beta,
    beta_integral,
    gamma,
    gamma_deriv_at_one,
    log_beta,
    log_gamma,
)
from bigamma.quad import DEFAULT_CONFIG, tanh_sinh

# Gamma^(n)(1) from mpmath.diff(mpmath.gamma, 1, n) at 30 digits
DERIVS = {
    0: 1.0,
    1: -0.57721566490153286061,
    2: 1.9781119906559451108,
    3: -5.4448744564853177341,
    4: 23.561474084025604496,
    5: -117.83940826837742425,
    6: 715.06736252731885907,
    7: -5019.8488726298549312,
    8: 40243.621573335758134,
}


def test_log_gamma_examples():
    assert log_gamma(1) == 0.0
    assert log_gamma(2) == 0.0
    assert abs(log_gamma(5) - math.log(24)) <= 1e-14
    assert abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) <= 1e-14


def _gamma_quadrature(x):
    # int_0^1 (-ln t)^(x-1) dt; -ln t taken from the distance to 1 near t = 1
    def integrand(t, dl, dr):
        minus_log_t = np.where(t <= 0.5, -np.log(dl), -np.log1p(-dr))
        return (x - 1) * np.log(minus_log_t)

    return tanh_sinh(integrand, 0, 1, distances=True, log_integrand=True)


def test_log_gamma_half_by_quadrature():
    r = _gamma_quadrature(0.5)
    assert abs(math.exp(log_gamma(0.5)) - r.value) <= 1e-9


def test_log_gamma_relative_error_against_mpmath():
    xs = np.concatenate([np.geomspace(1e-3, 1, 40), np.linspace(0.8, 2.2, 57), np.linspace(2.5, 171, 60)])
    worst = 0.0
    for x in xs:
        ref = float(mpmath.loggamma(mpmath.mpf(float(x))))
        got = log_gamma(x)
        if ref == 0:
            assert got == 0
            continue
        worst = max(worst, abs(got - ref) / abs(ref))
    assert worst <= 1e-13


def test_log_gamma_against_quadrature_grid():
    # Gamma(x) = int_0^1 (-ln t)^(x-1) dt on a 50-point grid
    for x in np.linspace(0.3, 12, 50):
        r = _gamma_quadrature(x)
        assert abs(math.exp(log_gamma(x)) / r.value - 1) <= 1e-9


def test_gamma_examples():
    assert gamma(1) == 1.0
    assert gamma(2) == 1.0
    assert abs(gamma(6) - 120) <= 1e-11


@pytest.mark.parametrize("x", [0.1, 0.5, 1.5, 7.3, 30])
def test_recurrence(x):
    assert abs(gamma(x + 1) / gamma(x) / x - 1) <= 1e-12


def test_gamma_overflow():
    with pytest.raises(RangeError, match="log_gamma"):
        gamma(200)
    assert log_gamma(200) > 700


@pytest.mark.parametrize("bad", [0, -1, -0.5, float("nan")])
def test_domain(bad):
    with pytest.raises(DomainError):
        log_gamma(bad)
    with pytest.raises(DomainError):
        beta(bad, 1)


def test_beta_examples():
    assert abs(beta(1, 1) - 1) <= 1e-15
    assert abs(beta(2, 3) - 1 / 12) <= 1e-15
    assert beta(0.7, 2.4) == beta(2.4, 0.7)
    assert abs(beta(0.5, 0.5) - math.pi) <= 1e-14
    assert abs(math.exp(log_beta(3, 4)) - beta(3, 4)) <= 1e-16


def test_beta_integral_examples():
    for (x, y), exact in {(0.5, 0.5): math.pi, (2, 3): 1 / 12, (1, 1): 1.0}.items():
        r = beta_integral(x, y)
        assert abs(r.value - exact) <= 1e-9
        assert abs(r.value - beta(x, y)) <= 1e-9


def test_beta_agrees_with_quadrature_grid():
    for x in np.linspace(0.3, 4, 5):
        for y in np.linspace(0.3, 4, 5):
            r = beta_integral(x, y)
            assert abs(beta(x, y) - r.value) <= max(1e-9, 10 * r.err_estimate)


@pytest.mark.parametrize("n", sorted(DERIVS))
def test_derivatives_at_one(n):
    value, err = gamma_deriv_at_one(n)
    assert abs(value - DERIVS[n]) <= max(1e-10 * abs(DERIVS[n]), 10 * err)


def test_euler_constant_tight():
    value, err = gamma_deriv_at_one(1, DEFAULT_CONFIG.tightened())
    assert abs(value + 0.5772156649015) <= 1e-10
    assert err <= 1e-10


def test_second_derivative_by_finite_differences():
    h = 1e-3

    def d2(h):
        return (gamma(1 + h) - 2 * gamma(1) + gamma(1 - h)) / h**2

    richardson = (4 * d2(h / 2) - d2(h)) / 3
    assert abs(richardson - gamma_deriv_at_one(2)[0]) <= 1e-6


def test_derivative_signs():
    assert gamma_deriv_at_one(1)[0] < 0
    assert gamma_deriv_at_one(2)[0] > 0


def test_derivative_cap():
    gamma_deriv_at_one(DERIV_CAP)
    with pytest.raises(DomainError):
        gamma_deriv_at_one(DERIV_CAP + 1)
    with pytest.raises(DomainError):
        gamma_deriv_at_one(-1)
    with pytest.raises(DomainError):
        gamma_deriv_at_one(1.5)


def test_high_derivative_matches_mpmath():
    ref = float(mpmath.diff(mpmath.gamma, 1, 20))
    value, err = gamma_deriv_at_one(20)
    assert abs(value / ref - 1) <= 1e-9


def test_deriv_table_concurrent_fill():
    table = DerivTable()
    out = []

    def worker():
        out.append(table.get(3, DEFAULT_CONFIG).value)

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(out)) == 1
    snap = table.values()
    assert list(snap) == [3]
    assert table.get(0, DEFAULT_CONFIG).value == 1.0
