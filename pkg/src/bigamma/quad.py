"""
Double-exponential (tanh-sinh) quadrature.

The engine targets integrands with algebraic or logarithmic singularities at
the endpoints of a finite interval.  With the substitution

    t(u) = 1 / (1 + exp(-pi sinh u)),   u in (-inf, inf)

the unit interval is mapped onto the real line and the transformed integrand
decays double exponentially, so the plain trapezoid rule in ``u`` converges
very quickly.  Each refinement level halves the step in ``u``; only the new
(odd) nodes are evaluated at every level.

Abscissas are kept as *distances from the nearer endpoint* (``t`` and
``1 - t`` are both computed without subtraction), which lets integrands that
need ``-log(x)`` or ``-log(1 - x)`` close to the endpoints evaluate them
without catastrophic cancellation.  Pass ``distances=True`` to receive
``(x, x - a, b - x)``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, IntegrandBlowUp

__all__ = [
    "EvalConfig",
    "QuadResult",
    "DEFAULT_CONFIG",
    "tanh_sinh",
    "integrate_semi_infinite",
    "integrate_2d",
    "combine",
    "sum_to_tolerance",
]

_EPS = np.finfo(float).eps

# pi*sinh(U_MAX) = 690, so endpoint distances never drop below ~1e-300.
_U_MAX = math.asinh(690.0 / math.pi)


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and caps shared by every numeric routine."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_level: int = 12
    max_evals: int = 2_000_000
    domain_cap: float = 50.0

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be > 0, got {self.abs_tol}")
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.max_level < 3:
            raise DomainError(f"max_level must be >= 3, got {self.max_level}")
        if self.max_evals < 100:
            raise DomainError(f"max_evals must be >= 100, got {self.max_evals}")
        if not self.domain_cap > 0:
            raise DomainError(f"domain_cap must be > 0, got {self.domain_cap}")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))

    def scaled(self, factor: float) -> "EvalConfig":
        """Copy with both tolerances multiplied by ``factor``."""
        return replace(self, abs_tol=self.abs_tol * factor, rel_tol=self.rel_tol * factor)

    def tightened(self, factor: float = 100.0) -> "EvalConfig":
        # rel_tol below a few ulps can never be met
        rel = max(self.rel_tol / factor, 8 * _EPS)
        return replace(self, abs_tol=self.abs_tol / factor, rel_tol=rel,
                       max_level=max(self.max_level, 14))


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    evals: int
    converged: bool
    reduced_confidence: bool = False

    def __float__(self):
        return float(self.value)


def combine(results: Sequence[QuadResult], cfg: EvalConfig, signs: Sequence[float] | None = None) -> QuadResult:
    """Signed sum of independent quadrature results.

    The sum counts as converged only if every part converged *and* the summed
    error estimate still meets the tolerance for the summed value.
    """
    if signs is None:
        signs = [1.0] * len(results)
    value = math.fsum(s * r.value for s, r in zip(signs, results))
    err = math.fsum(r.err_estimate for r in results)
    converged = bool(all(r.converged for r in results) and err <= cfg.tolerance(value))
    return QuadResult(
        value=value,
        err_estimate=err,
        evals=sum(r.evals for r in results),
        converged=converged,
        reduced_confidence=any(r.reduced_confidence for r in results),
    )


def sum_to_tolerance(
    parts: Callable[[EvalConfig], Sequence[QuadResult]],
    cfg: EvalConfig,
    signs: Sequence[float] | None = None,
    max_rounds: int = 3,
) -> QuadResult:
    """``combine`` with retries for sums that cancel.

    Parts that each meet their own relative tolerance can still miss the
    tolerance of a much smaller sum.  When that happens the parts are
    recomputed with tolerances shrunk by |sum| / sum(|part|).
    """
    results = parts(cfg)
    out = combine(results, cfg, signs)
    work = cfg
    for _ in range(max_rounds):
        if out.converged or not all(r.converged for r in results):
            break
        magnitude = math.fsum(abs(r.value) for r in results)
        factor = max(abs(out.value), cfg.abs_tol) / max(magnitude, cfg.abs_tol) / 4.0
        if work.rel_tol * factor < 4 * _EPS:
            break
        work = work.scaled(factor)
        results = parts(work)
        out = combine(results, cfg, signs)
    return out


@dataclass(frozen=True)
class _Level:
    u: np.ndarray
    t_left: np.ndarray   # t(u), distance from 0 on the unit interval
    t_right: np.ndarray  # 1 - t(u), distance from 1
    weight: np.ndarray   # dt/du = pi cosh(u) t (1 - t)
    log_weight: np.ndarray


class _NodeTables:
    """Per-level node tables on the unit interval, built once and shared."""

    def __init__(self):
        self._levels: list[_Level] = []
        self._lock = threading.Lock()

    @staticmethod
    def _build(level: int) -> _Level:
        if level == 0:
            k = np.arange(-math.floor(_U_MAX), math.floor(_U_MAX) + 1, dtype=float)
            u = k
        else:
            h = 2.0 ** -level
            jmax = math.floor((_U_MAX / h - 1) / 2)
            j = np.arange(-jmax - 1, jmax + 1, dtype=float)
            u = (2 * j + 1) * h
            u = u[np.abs(u) <= _U_MAX]
        v = math.pi * np.sinh(u)
        t_left = 1.0 / (1.0 + np.exp(-v))
        t_right = 1.0 / (1.0 + np.exp(v))
        weight = math.pi * np.cosh(u) * t_left * t_right
        log_weight = (math.log(math.pi) + np.log(np.cosh(u))
                      - np.logaddexp(0.0, -v) - np.logaddexp(0.0, v))
        for arr in (u, t_left, t_right, weight, log_weight):
            arr.setflags(write=False)
        return _Level(u, t_left, t_right, weight, log_weight)

    def get(self, level: int) -> _Level:
        if level < len(self._levels):
            return self._levels[level]
        with self._lock:
            while len(self._levels) <= level:
                self._levels.append(self._build(len(self._levels)))
        return self._levels[level]


_TABLES = _NodeTables()


def _weighted_samples(f, a, b, width, nodes: _Level, distances: bool, log_integrand: bool) -> np.ndarray:
    """Return weight * f at the nodes of one level (without width and step)."""
    dl = width * nodes.t_left
    dr = width * nodes.t_right
    x = np.where(nodes.t_left <= 0.5, a + dl, b - dr)
    # nodes within an ulp of an endpoint would round onto it
    x = np.clip(x, np.nextafter(a, b), np.nextafter(b, a))
    with np.errstate(all="ignore"):
        out = f(x, dl, dr) if distances else f(x)
        vals = np.broadcast_to(np.asarray(out, dtype=float), x.shape)
        if log_integrand:
            # -inf means an exact zero; nan or +inf is a genuine blow-up
            bad = np.isnan(vals) | (vals == np.inf)
        else:
            bad = ~np.isfinite(vals)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise IntegrandBlowUp(float(x[i]), float(vals[i]))
        if log_integrand:
            contrib = np.exp(vals + nodes.log_weight)
        else:
            contrib = vals * nodes.weight
    if not np.all(np.isfinite(contrib)):
        i = int(np.flatnonzero(~np.isfinite(contrib))[0])
        raise IntegrandBlowUp(float(x[i]), float(vals[i]))
    return contrib


def tanh_sinh(
    f: Callable[..., np.ndarray],
    a: float,
    b: float,
    cfg: EvalConfig | None = None,
    *,
    distances: bool = False,
    log_integrand: bool = False,
) -> QuadResult:
    """Integrate ``f`` over the open interval ``(a, b)``.

    ``f`` must accept a numpy array of abscissas.  With ``distances=True`` it
    is called as ``f(x, x - a, b - x)`` with both distances computed exactly
    from the node tables.  With ``log_integrand=True`` ``f`` returns the log
    of a non-negative integrand; the node weights are then applied in log
    space, so integrands whose values overflow near an endpoint still work as
    long as weight * f is representable.  Endpoints are never sampled.

    The refinement stops once two successive levels (from level 2 on) agree
    to within ``max(abs_tol, rel_tol*|value|)``; the error estimate is that
    difference plus the magnitude of the outermost samples (truncation of the
    infinite trapezoid sum) plus a roundoff floor.  Running out of levels or
    evaluations returns ``converged=False`` rather than raising.
    """
    cfg = cfg or DEFAULT_CONFIG
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"need finite a < b, got ({a}, {b})")
    width = b - a

    total = 0.0
    abs_total = 0.0
    tail = {-1: (0.0, 0.0), 1: (0.0, 0.0)}  # side -> (|u|, |w f|)
    evals = 0
    prev = None
    value = 0.0
    err = math.inf
    converged = False
    for level in range(cfg.max_level + 1):
        nodes = _TABLES.get(level)
        if evals + nodes.u.size > cfg.max_evals:
            break
        contrib = _weighted_samples(f, a, b, width, nodes, distances, log_integrand)
        evals += nodes.u.size
        total += float(np.sum(contrib))
        abs_total += float(np.sum(np.abs(contrib)))
        for side, idx in ((-1, int(np.argmin(nodes.u))), (1, int(np.argmax(nodes.u)))):
            if abs(nodes.u[idx]) > tail[side][0]:
                tail[side] = (abs(float(nodes.u[idx])), abs(float(contrib[idx])))

        h = 2.0 ** -level
        value = width * h * total
        if prev is not None and level >= 2:
            diff = abs(value - prev)
            truncation = width * (tail[-1][1] + tail[1][1])
            roundoff = 10 * _EPS * width * h * abs_total
            err = float(diff + truncation + roundoff)
            tol = cfg.tolerance(value)
            if err <= tol:
                converged = True
                break
            if level >= 5 and truncation > 10 * tol:
                # the outermost node no longer moves, so finer steps cannot
                # shrink the truncated tail: the integral is not converging
                break
        prev = value

    return QuadResult(value=value, err_estimate=err, evals=evals, converged=converged)


def integrate_semi_infinite(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    cfg: EvalConfig | None = None,
) -> QuadResult:
    """Integrate ``f`` over ``(a, inf)``.

    Uses ``t = a - log(u)`` to map onto ``(0, 1)``.  The integrand must decay
    at least exponentially; slower decay shows up as non-convergence.
    """
    a = float(a)
    if not math.isfinite(a):
        raise DomainError(f"lower limit must be finite, got {a}")

    def mapped(u, du_left, du_right):
        # -log(u) from whichever distance is accurate
        s = np.where(u <= 0.5, -np.log(du_left), -np.log1p(-du_right))
        return f(a + s) / u

    return tanh_sinh(mapped, 0.0, 1.0, cfg, distances=True)


def integrate_2d(
    f: Callable[[float, np.ndarray], np.ndarray],
    cfg: EvalConfig | None = None,
    *,
    inner: str = "y",
) -> QuadResult:
    """Iterated tanh-sinh over the open unit square.

    ``f(x, y)`` is called with one coordinate scalar and the other an array.
    By default the inner integral runs over ``y``; ``inner="x"`` swaps the
    order.  The error estimate is the outer estimate plus the largest inner
    estimate (the square has unit area, so that bounds the integrated inner
    error).
    """
    cfg = cfg or DEFAULT_CONFIG
    if inner not in ("x", "y"):
        raise DomainError(f"inner must be 'x' or 'y', got {inner!r}")

    inner_err = 0.0
    inner_evals = 0
    inner_ok = True

    def outer_integrand(outer_pts):
        nonlocal inner_err, inner_evals, inner_ok
        out = np.empty_like(outer_pts)
        for i, p in enumerate(outer_pts):
            p = float(p)
            if inner == "y":
                g = lambda q, p=p: f(p, q)
            else:
                g = lambda q, p=p: f(q, p)
            try:
                r = tanh_sinh(g, 0.0, 1.0, cfg)
            except IntegrandBlowUp as exc:
                pair = (p, exc.abscissa) if inner == "y" else (exc.abscissa, p)
                raise IntegrandBlowUp(pair, exc.value) from exc
            out[i] = r.value
            inner_err = max(inner_err, r.err_estimate)
            inner_evals += r.evals
            inner_ok = inner_ok and r.converged
        return out

    outer = tanh_sinh(outer_integrand, 0.0, 1.0, cfg)
    err = outer.err_estimate + inner_err
    converged = bool(outer.converged and inner_ok and err <= cfg.tolerance(outer.value))
    return QuadResult(value=outer.value, err_estimate=err, evals=inner_evals,
                      converged=converged)
