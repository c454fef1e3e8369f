"""
The Bigamma function, its incomplete form and the distribution ratio.

    Gamma(x, y)   = int_0^1 (-ln t)^(x-1) (-ln(1-t))^(y-1) dt
    Gamma_z(x, y) = same integrand over (0, z)
    I_z(x, y)     = Gamma_z(x, y) / Gamma(x, y)

The canonical path splits the unit interval at 1/2 and substitutes
s = -ln t on the right half (and u = 1 - t, s = -ln u on the left), which
gives Gamma(x, y) = G(x, y) + G(y, x) with

    G(x, y) = int_0^{ln 2} s^(x-1) e^(-s) (-ln(1 - e^(-s)))^(y-1) ds.

Each half is singular only at s = 0, and the sum is symmetric in (x, y) by
construction.  ``bigamma_unit_interval`` integrates the raw integrand in one
pass and is kept only as an independent cross-check.
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import replace

import numpy as np

from .errors import DomainError, RangeError
from .gamma_ref import _log_t_and_log_1mt
from .quad import DEFAULT_CONFIG, EvalConfig, QuadResult, combine, sum_to_tolerance, tanh_sinh

__all__ = [
    "bigamma",
    "bigamma_unit_interval",
    "bigamma_scaled",
    "incomplete",
    "ratio",
    "RatioRangeWarning",
    "SMALL_ARG",
]

LN2 = math.log(2.0)
# Below this the t^(y-1)-like singularity is too sharp for full tolerance.
SMALL_ARG = 0.05


class RatioRangeWarning(RuntimeWarning):
    """I_z fell outside [0, 1] by more than its error estimate."""


def _log_neg_log1m_exp(w):
    """log(-ln(1 - e^w)) for w < 0, without underflow when e^w is tiny."""
    w = np.asarray(w, dtype=float)
    near = w > -LN2
    ew = np.exp(np.where(near, -1.0, w))
    ratio = np.where(ew > 0, -np.log1p(-ew) / np.where(ew > 0, ew, 1.0), 1.0)
    far_val = w + np.log(ratio)
    near_val = np.log(-np.log(-np.expm1(np.where(near, w, -1.0))))
    return np.where(near, near_val, far_val)


def _check_point(x: float, y: float, cfg: EvalConfig) -> tuple[float, float]:
    x = float(x)
    y = float(y)
    if not (x > 0 and y > 0) or math.isinf(x) or math.isinf(y):
        raise DomainError(f"Bigamma requires x > 0 and y > 0, got ({x}, {y})")
    if x > cfg.domain_cap or y > cfg.domain_cap:
        raise RangeError(
            f"({x}, {y}) exceeds the domain cap {cfg.domain_cap}; raise EvalConfig.domain_cap to go further"
        )
    return x, y


def _guarded(x: float, y: float, cfg: EvalConfig) -> tuple[EvalConfig, bool]:
    if min(x, y) < SMALL_ARG:
        return cfg.scaled(10.0), True
    return cfg, False


def _flag(r: QuadResult, reduced: bool) -> QuadResult:
    return replace(r, reduced_confidence=True) if reduced and not r.reduced_confidence else r


def _half(x: float, y: float, cfg: EvalConfig) -> QuadResult:
    def integrand(s):
        return (x - 1.0) * np.log(s) - s + (y - 1.0) * _log_neg_log1m_exp(-s)

    return tanh_sinh(integrand, 0.0, LN2, cfg, log_integrand=True)


@functools.lru_cache(maxsize=65536)
def _bigamma_at(x: float, y: float, work: EvalConfig) -> QuadResult:
    """Half-domain evaluation at exactly the tolerances in ``work``."""
    half_cfg = replace(work, abs_tol=work.abs_tol / 2)
    return combine([_half(x, y, half_cfg), _half(y, x, half_cfg)], work)


def _bigamma(x: float, y: float, cfg: EvalConfig) -> QuadResult:
    work, reduced = _guarded(x, y, cfg)
    return _flag(_bigamma_at(x, y, work), reduced)


def bigamma(x: float, y: float, cfg: EvalConfig | None = None) -> QuadResult:
    """Gamma(x, y) by the half-domain exponential form.

    >>> round(bigamma(2, 2).value, 10)
    0.3550659332
    """
    cfg = cfg or DEFAULT_CONFIG
    x, y = _check_point(x, y, cfg)
    return _bigamma(x, y, cfg)


def bigamma_unit_interval(x: float, y: float, cfg: EvalConfig | None = None) -> QuadResult:
    """Gamma(x, y) by a single tanh-sinh pass over (0, 1) on the raw integrand."""
    cfg = cfg or DEFAULT_CONFIG
    x, y = _check_point(x, y, cfg)
    work, reduced = _guarded(x, y, cfg)

    def integrand(t, dl, dr):
        log_t, log_1mt = _log_t_and_log_1mt(t, dl, dr)
        return (x - 1.0) * np.log(-log_t) + (y - 1.0) * np.log(-log_1mt)

    return _flag(tanh_sinh(integrand, 0.0, 1.0, work, distances=True, log_integrand=True), reduced)


def bigamma_scaled(x: float, y: float, a: float, cfg: EvalConfig | None = None) -> QuadResult:
    """a^x int_0^1 t^(a-1) (-ln t)^(x-1) (-ln(1 - t^a))^(y-1) dt.

    Equal to Gamma(x, y) for every a > 0.
    """
    cfg = cfg or DEFAULT_CONFIG
    x, y = _check_point(x, y, cfg)
    a = float(a)
    if not a > 0 or math.isinf(a):
        raise DomainError(f"scale a must be > 0, got {a}")
    work, reduced = _guarded(x, y, cfg)
    log_a = math.log(a)

    def integrand(t, dl, dr):
        log_t, _ = _log_t_and_log_1mt(t, dl, dr)
        return (
            x * log_a
            + (a - 1.0) * log_t
            + (x - 1.0) * np.log(-log_t)
            + (y - 1.0) * _log_neg_log1m_exp(a * log_t)
        )

    return _flag(tanh_sinh(integrand, 0.0, 1.0, work, distances=True, log_integrand=True), reduced)


def _incomplete_left(x: float, y: float, z: float, cfg: EvalConfig) -> QuadResult:
    # 0 < z <= 1/2: singular only at t = 0, where t itself is exact
    def integrand(t):
        return (x - 1.0) * np.log(-np.log(t)) + (y - 1.0) * np.log(-np.log1p(-t))

    return tanh_sinh(integrand, 0.0, z, cfg, log_integrand=True)


def incomplete(x: float, y: float, z: float, cfg: EvalConfig | None = None) -> QuadResult:
    """Incomplete Bigamma Gamma_z(x, y), z in [0, 1].

    For z > 1/2 this uses Gamma(x, y) - Gamma_{1-z}(y, x), which keeps the
    singular endpoint of every quadrature at the left.
    """
    cfg = cfg or DEFAULT_CONFIG
    x, y = _check_point(x, y, cfg)
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"z must lie in [0, 1], got {z}")
    if z == 0.0:
        return QuadResult(0.0, 0.0, 0, True)
    if z == 1.0:
        return bigamma(x, y, cfg)
    work, reduced = _guarded(x, y, cfg)
    if z <= 0.5:
        return _flag(_incomplete_left(x, y, z, work), reduced)

    def parts(c: EvalConfig):
        return [_bigamma_at(x, y, c), _incomplete_left(y, x, 1.0 - z, c)]

    return _flag(sum_to_tolerance(parts, work, signs=[1.0, -1.0]), reduced)


def ratio(x: float, y: float, z: float, cfg: EvalConfig | None = None) -> float:
    """Bigamma distribution function I_z(x, y).

    Values outside [0, 1] are clamped when the overshoot is within the
    combined error estimate; otherwise they are returned as computed and a
    ``RatioRangeWarning`` is issued.
    """
    cfg = cfg or DEFAULT_CONFIG
    num = incomplete(x, y, z, cfg)
    den = bigamma(x, y, cfg)
    value = num.value / den.value
    err = (num.err_estimate + abs(value) * den.err_estimate) / den.value
    overshoot = max(-value, value - 1.0)
    if overshoot > 0:
        if overshoot <= err:
            return min(max(value, 0.0), 1.0)
        warnings.warn(
            f"I_z({x}, {y}) at z={z} is {value!r}, outside [0, 1] beyond its error {err:.3g}",
            RatioRangeWarning,
            stacklevel=2,
        )
    return value
