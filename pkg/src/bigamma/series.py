"""
Truncated power series of Gamma(x, y) and B(x, y) around (1, 1).

    Gamma(x, y) = sum_{m,n>=0} (x-1)^m (y-1)^n / (m! n!) Gamma_ln(m+1, n+1)
    B(x, y)     = sum_{m,n>=0} (-1)^(m+n) (x-1)^m (y-1)^n / (m! n!) Gamma(m+1, n+1)

Both sums run over independent indices.  Terms are accumulated in shells of
constant m + n, low to high.  Values are only reported inside a trust radius
around (1, 1); outside it the coefficient growth (the edge rows are
Gamma^(n)(1), which grow like n!) makes the truncation meaningless.

This module also holds the finite-difference checks of the coefficient
identities and the two double-integral sums.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .checks import CheckResult, Relation, make_result
from .core import bigamma
from .errors import CoverageError, DomainError
from .gamma_ref import beta
from .loglog import CoeffTable, TableKind, build_table, gamma_ln
from .quad import DEFAULT_CONFIG, EvalConfig, integrate_2d

__all__ = [
    "SeriesEstimate",
    "TRUST_RADIUS",
    "FD_MAX_ORDER",
    "DOUBLE_INTEGRAL_CONFIG",
    "bigamma_series",
    "beta_series",
    "check_partial_derivative_gamma",
    "check_partial_derivative_beta",
    "check_double_integral_gamma",
    "check_double_integral_beta",
]

TRUST_RADIUS = 0.5
FD_MAX_ORDER = 4
FD_STEP = 1e-2
FD_REL_TOL = 1e-3
DOUBLE_INTEGRAL_TOL = 1e-5
# The iterated integrals need one Bigamma evaluation per node pair, so the
# outer refinement is kept shallow (level 3 is ~10^4 evaluations).
DOUBLE_INTEGRAL_CONFIG = EvalConfig(abs_tol=1e-7, rel_tol=1e-7, max_level=3)


@dataclass(frozen=True)
class SeriesEstimate:
    value: float
    order: int
    last_shell_magnitude: float
    coeff_err_bound: float

    def __float__(self):
        return float(self.value)


def _check_order(order: int) -> int:
    if int(order) != order or order < 0:
        raise DomainError(f"series order must be a non-negative integer, got {order}")
    return int(order)


def _shell_sum(x, y, order, table: CoeffTable, alternating: bool, radius, allow_outside) -> SeriesEstimate:
    order = _check_order(order)
    dx, dy = float(x) - 1.0, float(y) - 1.0
    if not allow_outside and max(abs(dx), abs(dy)) > radius:
        raise DomainError(
            f"({x}, {y}) lies outside the series trust radius {radius} around (1, 1)"
        )
    for m in range(order + 1):
        for n in range(order + 1):
            if (m + 1, n + 1) not in table:
                raise CoverageError((m + 1, n + 1))

    px = [dx**m / math.factorial(m) for m in range(order + 1)]
    py = [dy**n / math.factorial(n) for n in range(order + 1)]
    shells = []
    last = 0.0
    err_bound = []
    for s in range(2 * order + 1):
        terms = []
        for m in range(max(0, s - order), min(s, order) + 1):
            n = s - m
            factor = px[m] * py[n]
            if alternating and s % 2:
                factor = -factor
            terms.append(factor * table[(m + 1, n + 1)])
            err_bound.append(abs(factor) * table.err(m + 1, n + 1))
            if s == order:
                last = max(last, abs(terms[-1]))
        shells.append(math.fsum(terms))
    return SeriesEstimate(math.fsum(shells), order, last, math.fsum(err_bound))


def bigamma_series(
    x: float,
    y: float,
    order: int,
    table: CoeffTable,
    *,
    radius: float = TRUST_RADIUS,
    allow_outside: bool = False,
) -> SeriesEstimate:
    """Partial sum of the Gamma_ln expansion over 0 <= m, n <= order.

    ``table`` must be a GAMMA_LN table covering (order+1) x (order+1).

    >>> t = build_table("GAMMA_LN", 3, 3)
    >>> bigamma_series(1, 1, 2, t).value
    1.0
    """
    if table.kind is not TableKind.GAMMA_LN:
        raise DomainError(f"bigamma_series needs a GAMMA_LN table, got {table.kind.value}")
    return _shell_sum(x, y, order, table, False, radius, allow_outside)


def beta_series(
    x: float,
    y: float,
    order: int,
    table: CoeffTable,
    *,
    radius: float = TRUST_RADIUS,
    allow_outside: bool = False,
) -> SeriesEstimate:
    """Partial sum of the alternating expansion of B(x, y) with Bigamma coefficients."""
    if table.kind is not TableKind.BIGAMMA_INT:
        raise DomainError(f"beta_series needs a BIGAMMA_INT table, got {table.kind.value}")
    return _shell_sum(x, y, order, table, True, radius, allow_outside)


# central stencils, offsets -k..k
_STENCILS = {
    0: (1.0,),
    1: (-0.5, 0.0, 0.5),
    2: (1.0, -2.0, 1.0),
    3: (-0.5, 1.0, 0.0, -1.0, 0.5),
    4: (1.0, -4.0, 6.0, -4.0, 1.0),
}


def _mixed_partial(f, i: int, j: int, h: float) -> float:
    ci, cj = _STENCILS[i], _STENCILS[j]
    oi, oj = (len(ci) - 1) // 2, (len(cj) - 1) // 2
    acc = []
    for a, wa in enumerate(ci):
        if wa == 0.0:
            continue
        for b, wb in enumerate(cj):
            if wb == 0.0:
                continue
            acc.append(wa * wb * f(1.0 + (a - oi) * h, 1.0 + (b - oj) * h))
    return math.fsum(acc) / h ** (i + j)


def _richardson_partial(f, i: int, j: int, h: float = FD_STEP) -> tuple[float, float]:
    coarse = _mixed_partial(f, i, j, h)
    fine = _mixed_partial(f, i, j, h / 2)
    best = (4.0 * fine - coarse) / 3.0
    return best, abs(best - fine)


def _fd_orders(m: int, n: int) -> tuple[int, int]:
    for k in (m, n):
        if int(k) != k or k < 1:
            raise DomainError(f"indices must be integers >= 1, got ({m}, {n})")
    i, j = int(m) - 1, int(n) - 1
    if i + j > FD_MAX_ORDER:
        raise DomainError(
            f"finite differences support total order <= {FD_MAX_ORDER}, got m+n-2 = {i + j}"
        )
    return i, j


def check_partial_derivative_gamma(m: int, n: int, cfg: EvalConfig | None = None) -> CheckResult:
    """d^(m+n-2) Gamma / dx^(m-1) dy^(n-1) at (1, 1) against Gamma_ln(m, n)."""
    i, j = _fd_orders(m, n)
    cfg = (cfg or DEFAULT_CONFIG).tightened()
    flags = []

    def f(x, y):
        r = bigamma(x, y, cfg)
        flags.append(r.converged)
        return r.value

    fd, fd_err = _richardson_partial(f, i, j)
    coeff = gamma_ln(m, n, cfg)
    scale = max(abs(fd), abs(coeff.value))
    return make_result(
        "partial_derivative_gamma", (("m", m), ("n", n)), fd, coeff.value, Relation.EQ,
        err=coeff.err_estimate, converged=all(flags) and coeff.converged,
        tol=FD_REL_TOL * scale, note=f"richardson step change {fd_err:.3g}",
    )


def check_partial_derivative_beta(m: int, n: int, cfg: EvalConfig | None = None) -> CheckResult:
    """(-1)^(m+n) d^(m+n-2) B / dx^(m-1) dy^(n-1) at (1, 1) against Gamma(m, n)."""
    i, j = _fd_orders(m, n)
    cfg = cfg or DEFAULT_CONFIG
    fd, fd_err = _richardson_partial(beta, i, j)
    fd = (-1) ** (m + n) * fd
    ref = bigamma(m, n, cfg)
    scale = max(abs(fd), abs(ref.value))
    return make_result(
        "partial_derivative_beta", (("m", m), ("n", n)), fd, ref.value, Relation.EQ,
        err=ref.err_estimate, converged=ref.converged,
        tol=FD_REL_TOL * scale, note=f"richardson step change {fd_err:.3g}",
    )


@functools.lru_cache(maxsize=8)
def _coefficient_sum(kind: TableKind, order: int, cfg: EvalConfig) -> tuple[float, float, bool]:
    table = build_table(kind, order, order, cfg)
    terms, errs = [], []
    for m, n in table.keys():
        w = 1.0 / (math.factorial(m) * math.factorial(n))
        if kind is TableKind.GAMMA_LN and (m + n) % 2:
            w = -w
        terms.append(w * table[(m, n)])
        errs.append(abs(w) * table.err(m, n))
    return math.fsum(terms), math.fsum(errs), not table.failed


def _double_integral_check(name, kind, integrand, order, cfg, inner) -> CheckResult:
    order = _check_order(order)
    if order < 1:
        raise DomainError("double-integral sums start at m = n = 1; order must be >= 1")
    cfg = cfg or DOUBLE_INTEGRAL_CONFIG
    lhs = integrate_2d(integrand, cfg, inner=inner)
    rhs, rhs_err, rhs_ok = _coefficient_sum(kind, order, DEFAULT_CONFIG)
    return make_result(
        name, (("order", order),), lhs.value, rhs, Relation.EQ,
        err=lhs.err_estimate + rhs_err, converged=lhs.converged and rhs_ok,
        tol=DOUBLE_INTEGRAL_TOL,
        note=f"integral evals {lhs.evals}, converged={lhs.converged}",
        extra={"integral": lhs},
    )


def _bigamma_points(x, y):
    xs, ys = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    return np.array([bigamma(a, b).value for a, b in zip(xs.ravel(), ys.ravel())]).reshape(xs.shape)


def check_double_integral_gamma(order: int = 12, cfg: EvalConfig | None = None, *, inner: str = "y") -> CheckResult:
    """Iterated integral of Gamma over the unit square against
    sum_{m,n=1}^{order} (-1)^(m+n) Gamma_ln(m, n) / (m! n!).

    ``cfg`` controls the two-dimensional quadrature (default
    ``DOUBLE_INTEGRAL_CONFIG``); point values use the default tolerances.
    """
    return _double_integral_check("double_integral_gamma", TableKind.GAMMA_LN, _bigamma_points, order, cfg, inner)


def check_double_integral_beta(order: int = 12, cfg: EvalConfig | None = None, *, inner: str = "y") -> CheckResult:
    """Iterated integral of B over the unit square against
    sum_{m,n=1}^{order} Gamma(m, n) / (m! n!)."""
    vbeta = np.vectorize(beta, otypes=[float])
    return _double_integral_check("double_integral_beta", TableKind.BIGAMMA_INT, vbeta, order, cfg, inner)
