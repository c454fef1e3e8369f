"""Acceptance criteria; the terminal summary prints one line per criterion."""

import itertools
import math

import numpy as np
import pytest

from bigamma.bounds import DEFAULT_GRID, hoelder_coeff_check, lemma1_check, run_suite
from bigamma.checks import Verdict
from bigamma.cli import main
from bigamma.core import bigamma, bigamma_scaled, bigamma_unit_interval, incomplete
from bigamma.gamma_ref import beta, gamma, gamma_deriv_at_one
from bigamma.loglog import build_table, gamma_ln, load_table, save_table
from bigamma.quad import DEFAULT_CONFIG
from bigamma.series import (
    beta_series,
    bigamma_series,
    check_double_integral_beta,
    check_double_integral_gamma,
    check_partial_derivative_beta,
    check_partial_derivative_gamma,
)

pytestmark = pytest.mark.acceptance

C1 = "identity anchors Gamma(1,1)=1 and Gamma(x,1)=Gamma(x)"
C2 = "closed form Gamma(2,2) = 2 - pi^2/6 on both paths"
C3 = "Gamma'(1) = -0.5772156649015 +- 1e-10"
C4 = "scaling-representation EQ checks on the (alpha, x) grid"
C5 = "bigamma_scaled constant in a within 1e-7"
C6 = "bounds suite on the default grid: 0 FAIL, collapses at (1,1)"
C7 = "order-12 series within 1e-6 on the 5x5 grid around (1,1)"
C8 = "partial-derivative identities for m+n <= 4"
C9 = "double integrals match coefficient sums within 1e-5"
C10 = "incomplete-function additivity, reflection, monotonicity"
C11 = "coefficient bounds for 1 <= m,n <= 6"
C12 = "bit-exact table round trip and byte-identical CLI runs"


@pytest.mark.criterion(1, C1)
def test_identity_anchors():
    assert abs(bigamma(1, 1).value - 1) <= 1e-10
    for x in (0.5, 1, 1.5, 2, 3.5, 7):
        assert abs(bigamma(x, 1).value / gamma(x) - 1) <= 1e-8
        assert abs(bigamma(1, x).value / gamma(x) - 1) <= 1e-8


@pytest.mark.criterion(2, C2)
def test_closed_form_anchor():
    exact = 2 - math.pi**2 / 6
    cfg = DEFAULT_CONFIG.tightened()
    assert abs(bigamma(2, 2, cfg).value / exact - 1) <= 1e-9
    assert abs(bigamma_unit_interval(2, 2, cfg).value / exact - 1) <= 1e-9


@pytest.mark.criterion(3, C3)
def test_euler_constant_anchor():
    value, _ = gamma_deriv_at_one(1, DEFAULT_CONFIG.tightened())
    assert abs(value + 0.5772156649015) <= 1e-10


@pytest.mark.criterion(4, C4)
@pytest.mark.parametrize("alpha,x", list(itertools.product((0, 0.5, 1, 2), (0.5, 1, 1.7, 3))))
def test_scaling_representation(alpha, x):
    r = lemma1_check(alpha, x)
    assert r.verdict is Verdict.PASS
    assert abs(r.margin) <= 1e-8 * abs(r.rhs)


@pytest.mark.criterion(5, C5)
@pytest.mark.parametrize("point", [(2, 2), (1.3, 0.8), (0.6, 1.4), (3, 0.5)])
def test_scaling_invariance(point):
    base = bigamma_scaled(*point, 1).value
    for a in (0.25, 0.5, 1, 2, 4):
        assert abs(bigamma_scaled(*point, a).value / base - 1) <= 1e-7


COLLAPSE = {"quadrant", "diag", "recip", "beta_compare", "jensen", "symmetry", "logconvex"}


@pytest.mark.criterion(6, C6)
def test_default_grid_suite():
    report = run_suite(DEFAULT_GRID, workers=4)
    assert report.count(Verdict.FAIL) == 0, report.failures()[:5]
    collapsed = [
        r for r in report.results
        if r.name in COLLAPSE and {k: v for k, v in r.point if k in "xy"} in ({"x": 1.0, "y": 1.0}, {"x": 1.0})
    ]
    assert {r.name for r in collapsed} >= {"quadrant", "diag", "recip", "beta_compare", "jensen"}
    for r in collapsed:
        assert abs(r.margin) <= 1e-9, r


AXIS = np.linspace(0.7, 1.3, 5)


@pytest.mark.criterion(7, C7)
def test_series_fidelity(gamma_ln_table, bigamma_int_table):
    for x, y in itertools.product(AXIS, AXIS):
        g = bigamma_series(x, y, 12, gamma_ln_table).value
        assert abs(g / bigamma(x, y).value - 1) <= 1e-6, (x, y)
        b = beta_series(x, y, 12, bigamma_int_table).value
        assert abs(b / beta(x, y) - 1) <= 1e-6, (x, y)


@pytest.mark.criterion(8, C8)
@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 4) for n in range(1, 4) if m + n <= 4])
def test_partial_derivative_identities(m, n):
    for r in (check_partial_derivative_gamma(m, n), check_partial_derivative_beta(m, n)):
        assert r.verdict is Verdict.PASS, r
        assert abs(r.lhs - r.rhs) <= 1e-3 * max(abs(r.rhs), 1e-300)


@pytest.mark.criterion(9, C9)
@pytest.mark.parametrize("check", [check_double_integral_gamma, check_double_integral_beta],
                         ids=["gamma", "beta"])
def test_double_integrals(check):
    r = check(12)
    assert r.verdict is Verdict.PASS, r
    assert abs(r.lhs - r.rhs) <= 1e-5


@pytest.mark.criterion(10, C10)
def test_incomplete_contract():
    report = run_suite(DEFAULT_GRID, ["incomplete_additivity", "ratio_reflection"], workers=4)
    assert report.results and not report.skipped
    for r in report.results:
        assert r.verdict is Verdict.PASS, r
        assert abs(r.lhs - r.rhs) <= 1e-8, r
    for x, y in itertools.product((0.25, 1, 3), (0.5, 2, 5)):
        ladder = [incomplete(x, y, z) for z in DEFAULT_GRID["z"]]
        for lo, hi in zip(ladder, ladder[1:]):
            assert hi.value - lo.value > lo.err_estimate + hi.err_estimate


@pytest.mark.criterion(11, C11)
@pytest.mark.parametrize("m", range(1, 7))
def test_coefficient_bounds(m):
    for n in range(1, 7):
        r = hoelder_coeff_check(m, n)
        assert r.verdict is Verdict.PASS, r
        assert r.extra["linear"].verdict is Verdict.PASS
    c = gamma_ln(m, m)
    d, d_err = gamma_deriv_at_one(2 * m - 2)
    assert abs(c.value) <= d + d_err + c.err_estimate


GOLDEN = [
    ("eval", "2", "2", "--z", "0.3", "--format", "csv"),
    ("table", "--format", "json"),
    ("series", "1.2", "0.9", "--which", "beta", "--format", "json"),
    ("verify", "--grid", "x=0.5,1,3;y=1,2;p=0.5", "--format", "csv", "--workers", "2"),
]


@pytest.mark.criterion(12, C12)
def test_persistence_and_determinism(tmp_path, capsys):
    table = build_table("GAMMA_LN", 6, 6)
    path = tmp_path / "g.txt"
    save_table(table, path)
    back = load_table(path, "GAMMA_LN")
    assert back.entries == table.entries
    for argv in GOLDEN:
        outputs = []
        for _ in range(2):
            assert main(list(argv)) == 0
            outputs.append(capsys.readouterr().out.encode())
        assert outputs[0] == outputs[1]
