"""
Inequality and identity certifier.

Every ``*_check`` function evaluates one statement about Gamma(x, y) at one
point and returns a ``CheckResult``.  ``run_suite`` sweeps a ``GridSpec``
through a selection of checks and aggregates the verdicts.

Preconditions are enforced with ``DomainError``; the suite runner turns those
into recorded skips rather than failures.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .checks import CheckResult, Relation, Verdict, make_result, worst
from .core import bigamma, bigamma_scaled, bigamma_unit_interval, incomplete
from .errors import DomainError, UnknownCheckError
from .gamma_ref import _log_t_and_log_1mt, beta, gamma, gamma_deriv_result, log_gamma
from .loglog import gamma_ln
from .quad import DEFAULT_CONFIG, EvalConfig, QuadResult, tanh_sinh

__all__ = [
    "GridSpec",
    "SuiteReport",
    "SkippedPoint",
    "CHECKS",
    "DEFAULT_GRID",
    "run_suite",
    "lemma1_check",
    "quadrant_check",
    "diag_check",
    "recip_check",
    "beta_compare_check",
    "reflection_upper_check",
    "reflection_lower_check",
    "jensen_check",
    "scaling_ineq_check",
    "corollary_a_check",
    "gamma_lower_check",
    "logconvex_check",
    "hoelder_coeff_check",
    "symmetry_check",
    "reduction_check",
    "scaling_identity_check",
    "incomplete_additivity_check",
    "ratio_reflection_check",
]


def _bg(x, y, cfg) -> QuadResult:
    return bigamma(x, y, cfg)


def _positive(name, *values):
    for v in values:
        if not v > 0 or math.isinf(v):
            raise DomainError(f"{name} requires positive finite arguments, got {values}")


def _euler_deriv(cfg) -> tuple[float, float, bool]:
    return gamma_deriv_result(1, cfg)


def lemma1_check(alpha: float, x: float, cfg: EvalConfig | None = None) -> CheckResult:
    """int_0^1 t^alpha (-ln t)^(x-1) dt = Gamma(x) / (alpha+1)^x."""
    cfg = cfg or DEFAULT_CONFIG
    alpha, x = float(alpha), float(x)
    if not alpha > -1:
        raise DomainError(f"lemma1 requires alpha > -1, got {alpha}")
    _positive("lemma1", x)

    def integrand(t, dl, dr):
        log_t, _ = _log_t_and_log_1mt(t, dl, dr)
        return alpha * log_t + (x - 1.0) * np.log(-log_t)

    lhs = tanh_sinh(integrand, 0.0, 1.0, cfg, distances=True, log_integrand=True)
    rhs = math.exp(log_gamma(x) - x * math.log1p(alpha))
    return make_result("lemma1", {"alpha": alpha, "x": x}, lhs.value, rhs, Relation.EQ,
                       err=lhs.err_estimate, converged=lhs.converged)


def _envelope(name, point, g: QuadResult, bounds: Sequence[tuple[Relation, float]], note="") -> CheckResult:
    """Check g against several bounds and report the binding one."""
    results = [
        make_result(name, point, g.value, rhs, rel, err=g.err_estimate, converged=g.converged)
        for rel, rhs in bounds
    ]
    w = worst(results)
    others = "; ".join(f"{r.relation.value} {r.rhs:.6g}" for r in results if r is not w)
    if others:
        note = f"{note}; also {others}" if note else f"also {others}"
    return make_result(name, point, w.lhs, w.rhs, w.relation, err=w.err,
                       converged=w.converged, note=note)


def quadrant_check(x: float, y: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Quadrant envelopes Gamma(x)/y^x and Gamma(y)/x^y around Gamma(x, y).

    On the lines x = 1 or y = 1 every adjacent quadrant statement applies and
    all of them are checked; the binding bound is reported.
    """
    cfg = cfg or DEFAULT_CONFIG
    x, y = float(x), float(y)
    _positive("quadrant", x, y)
    ex = gamma(x) / y**x  # Gamma(x) / y^x
    ey = gamma(y) / x**y  # Gamma(y) / x^y
    bounds = set()
    if x >= 1 and y >= 1:
        bounds |= {(Relation.GE, ex), (Relation.GE, ey)}
    if x >= 1 and y <= 1:
        bounds |= {(Relation.GE, ey), (Relation.LE, ex)}
    if x <= 1 and y >= 1:
        bounds |= {(Relation.GE, ex), (Relation.LE, ey)}
    if x <= 1 and y <= 1:
        bounds |= {(Relation.LE, ex), (Relation.LE, ey)}
    ordered = sorted(bounds, key=lambda b: (b[0].value, b[1]))
    return _envelope("quadrant", {"x": x, "y": y}, _bg(x, y, cfg), ordered)


def diag_check(x: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, x) >= Gamma(x)/x^x for x >= 1, reversed for x <= 1."""
    cfg = cfg or DEFAULT_CONFIG
    x = float(x)
    _positive("diag", x)
    rhs = gamma(x) / x**x
    rels = ([Relation.GE] if x >= 1 else []) + ([Relation.LE] if x <= 1 else [])
    return _envelope("diag", {"x": x}, _bg(x, x, cfg), [(r, rhs) for r in rels])


def recip_check(x: float, cfg: EvalConfig | None = None) -> CheckResult:
    """x^(-1/x) Gamma(1/x) <= Gamma(x, 1/x) <= x^x Gamma(x) for x >= 1, reversed for x <= 1."""
    cfg = cfg or DEFAULT_CONFIG
    x = float(x)
    _positive("recip", x)
    low = x ** (-1.0 / x) * gamma(1.0 / x)
    high = x**x * gamma(x)
    bounds = []
    if x >= 1:
        bounds += [(Relation.GE, low), (Relation.LE, high)]
    if x <= 1:
        bounds += [(Relation.LE, low), (Relation.GE, high)]
    return _envelope("recip", {"x": x}, _bg(x, 1.0 / x, cfg), bounds)


def beta_compare_check(x: float, y: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, y) >= B(x, y) when x, y >= 1; reversed when x, y <= 1.

    Mixed quadrants are rejected: no direction is asserted there.
    """
    cfg = cfg or DEFAULT_CONFIG
    x, y = float(x), float(y)
    _positive("beta_compare", x, y)
    if (x - 1.0) * (y - 1.0) < 0:
        raise DomainError(f"beta_compare has no stated direction in the mixed quadrant ({x}, {y})")
    rhs = beta(x, y)
    rels = ([Relation.GE] if x >= 1 and y >= 1 else []) + ([Relation.LE] if x <= 1 and y <= 1 else [])
    return _envelope("beta_compare", {"x": x, "y": y}, _bg(x, y, cfg), [(r, rhs) for r in rels])


def _unit_open(name, x):
    x = float(x)
    if not 0 < x < 1:
        raise DomainError(f"{name} requires x in (0, 1), got {x}")
    return x


def reflection_upper_check(x: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, 1-x) <= pi / sin(pi x)."""
    cfg = cfg or DEFAULT_CONFIG
    x = _unit_open("reflection_upper", x)
    g = _bg(x, 1.0 - x, cfg)
    rhs = math.pi / math.sin(math.pi * x)
    return make_result("reflection_upper", {"x": x}, g.value, rhs, Relation.LE,
                       err=g.err_estimate, converged=g.converged)


def reflection_lower_check(x: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, 1-x) >= exp(-Gamma'(1))."""
    cfg = cfg or DEFAULT_CONFIG
    x = _unit_open("reflection_lower", x)
    g = _bg(x, 1.0 - x, cfg)
    d1, d1_err, d1_ok = _euler_deriv(cfg)
    rhs = math.exp(-d1)
    return make_result("reflection_lower", {"x": x}, g.value, rhs, Relation.GE,
                       err=g.err_estimate + rhs * d1_err, converged=g.converged and d1_ok)


def jensen_check(x: float, y: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, y) >= exp((x + y - 2) Gamma'(1))."""
    cfg = cfg or DEFAULT_CONFIG
    x, y = float(x), float(y)
    _positive("jensen", x, y)
    g = _bg(x, y, cfg)
    d1, d1_err, d1_ok = _euler_deriv(cfg)
    rhs = math.exp((x + y - 2.0) * d1)
    return make_result("jensen", {"x": x, "y": y}, g.value, rhs, Relation.GE,
                       err=g.err_estimate + rhs * abs(x + y - 2.0) * d1_err,
                       converged=g.converged and d1_ok)


def _scaling_prefactor(x: float, a: float) -> float:
    # (a/e)^(x-1) ((1-x)/(1-a))^(x-1), with 0^0 = 1 at x = 1
    if x == 1.0:
        return 1.0
    return ((a / math.e) * (1.0 - x) / (1.0 - a)) ** (x - 1.0)


def scaling_ineq_check(x: float, y: float, a: float, cfg: EvalConfig | None = None) -> CheckResult:
    """The scaling lower bound (x <= 1, a < 1) and its reversal (x >= 1, a > 1, y > (a-1)/a).

    The right side is (a/e)^(x-1) ((1-x)/(1-a))^(x-1) int_0^1 t^((1-a)/a) (-ln(1-t))^(y-1) dt.
    """
    cfg = cfg or DEFAULT_CONFIG
    x, y, a = float(x), float(y), float(a)
    _positive("scaling_ineq", x, y, a)
    if a == 1.0:
        raise DomainError("scaling_ineq requires a != 1")
    if x <= 1 and a < 1:
        relation = Relation.GE
    elif x >= 1 and a > 1:
        if not y > (a - 1.0) / a:
            raise DomainError(f"reversed scaling bound needs y > (a-1)/a = {(a - 1) / a:.6g}, got {y}")
        relation = Relation.LE
    else:
        raise DomainError(f"scaling_ineq covers x <= 1 with a < 1 or x >= 1 with a > 1, got x={x}, a={a}")
    power = (1.0 - a) / a

    def integrand(t, dl, dr):
        log_t, log_1mt = _log_t_and_log_1mt(t, dl, dr)
        return power * log_t + (y - 1.0) * np.log(-log_1mt)

    integral = tanh_sinh(integrand, 0.0, 1.0, cfg, distances=True, log_integrand=True)
    pref = _scaling_prefactor(x, a)
    g = _bg(x, y, cfg)
    return make_result("scaling_ineq", {"x": x, "y": y, "a": a}, g.value, pref * integral.value, relation,
                       err=g.err_estimate + pref * integral.err_estimate,
                       converged=g.converged and integral.converged)


def corollary_a_check(x: float, y: float, a: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, y) >= a/(1 + a(y-1)) (a/e)^(x-1) ((1-x)/(1-a))^(x-1) for x <= 1, y >= 1, 0 < a < 1.

    The largest right side over a fine a-ladder is reported in ``extra``.
    """
    cfg = cfg or DEFAULT_CONFIG
    x, y, a = float(x), float(y), float(a)
    _positive("corollary_a", x, y, a)
    if not (x <= 1 and y >= 1 and a < 1):
        raise DomainError(f"corollary_a needs x <= 1, y >= 1, 0 < a < 1, got ({x}, {y}, {a})")

    def rhs_at(b):
        return b / (1.0 + b * (y - 1.0)) * _scaling_prefactor(x, b)

    ladder = np.linspace(0.01, 0.99, 99)
    best = max(ladder, key=rhs_at)
    g = _bg(x, y, cfg)
    return make_result("corollary_a", {"x": x, "y": y, "a": a}, g.value, rhs_at(a), Relation.GE,
                       err=g.err_estimate, converged=g.converged,
                       note=f"tightest a ~ {best:.2f}, bound {rhs_at(best):.6g}",
                       extra={"tightest_a": float(best), "tightest_rhs": float(rhs_at(best))})


def gamma_lower_check(x: float, a: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x) >= a^x e^(1-x) ((1-x)/(1-a))^(x-1) for x <= 1, 0 < a < 1."""
    x, a = float(x), float(a)
    _positive("gamma_lower", x, a)
    if not (x <= 1 and a < 1):
        raise DomainError(f"gamma_lower needs x <= 1 and 0 < a < 1, got ({x}, {a})")
    rhs = a * _scaling_prefactor(x, a)
    return make_result("gamma_lower", {"x": x, "a": a}, gamma(x), rhs, Relation.GE)


def logconvex_check(p1: Sequence[float], p2: Sequence[float], p: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(p P1 + (1-p) P2) <= Gamma(P1)^p Gamma(P2)^(1-p)."""
    cfg = cfg or DEFAULT_CONFIG
    (x1, y1), (x2, y2), p = tuple(map(float, p1)), tuple(map(float, p2)), float(p)
    _positive("logconvex", x1, y1, x2, y2)
    if not 0 <= p <= 1:
        raise DomainError(f"logconvex requires p in [0, 1], got {p}")
    q = 1.0 - p
    mid = _bg(p * x1 + q * x2, p * y1 + q * y2, cfg)
    g1, g2 = _bg(x1, y1, cfg), _bg(x2, y2, cfg)
    rhs = g1.value**p * g2.value**q
    # first-order propagation of the two endpoint errors into the product
    rhs_err = rhs * (p * g1.err_estimate / g1.value + q * g2.err_estimate / g2.value)
    point = {"x1": x1, "y1": y1, "x2": x2, "y2": y2, "p": p}
    return make_result("logconvex", point, mid.value, rhs, Relation.LE,
                       err=mid.err_estimate + rhs_err,
                       converged=mid.converged and g1.converged and g2.converged,
                       tol=1e-8 * max(abs(mid.value), abs(rhs)))


def hoelder_coeff_check(m: int, n: int, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma_ln(m, n)^2 <= Gamma^(2m-2)(1) Gamma^(2n-2)(1), together with the
    weaker |Gamma_ln(m, n)| <= (Gamma^(2m-2)(1) + Gamma^(2n-2)(1)) / 2.

    The squared bound is reported; the verdict is the worse of the two.
    """
    cfg = cfg or DEFAULT_CONFIG
    for k in (m, n):
        if int(k) != k or k < 1:
            raise DomainError(f"hoelder_coeff needs integers >= 1, got ({m}, {n})")
    m, n = int(m), int(n)
    c = gamma_ln(m, n, cfg)
    dm, dm_err, dm_ok = gamma_deriv_result(2 * m - 2, cfg)
    dn, dn_err, dn_ok = gamma_deriv_result(2 * n - 2, cfg)
    ok = c.converged and dm_ok and dn_ok
    point = {"m": m, "n": n}

    y_bound = make_result("hoelder_coeff", point, abs(c.value), 0.5 * (dm + dn), Relation.LE,
                          err=c.err_estimate + 0.5 * (dm_err + dn_err), converged=ok)
    sq_err = 2 * abs(c.value) * c.err_estimate + dm * dn_err + dn * dm_err
    squared = make_result("hoelder_coeff", point, c.value**2, dm * dn, Relation.LE,
                          err=sq_err, converged=ok)
    verdict = worst([y_bound, squared]).verdict
    note = f"linear bound margin {y_bound.margin:.6g} ({y_bound.verdict.value})"
    return CheckResult(squared.name, squared.point, squared.lhs, squared.rhs, squared.relation,
                       squared.margin, squared.tol, verdict, err=squared.err, converged=ok,
                       note=note, extra={"linear": y_bound})


def symmetry_check(x: float, y: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, y) = Gamma(y, x) on the direct unit-interval path."""
    cfg = cfg or DEFAULT_CONFIG
    a = bigamma_unit_interval(x, y, cfg)
    b = bigamma_unit_interval(y, x, cfg)
    return make_result("symmetry", {"x": x, "y": y}, a.value, b.value, Relation.EQ,
                       err=10 * (a.err_estimate + b.err_estimate),
                       converged=a.converged and b.converged)


def reduction_check(x: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, 1) = Gamma(x)."""
    cfg = cfg or DEFAULT_CONFIG
    g = _bg(x, 1.0, cfg)
    return make_result("reduction", {"x": x}, g.value, gamma(x), Relation.EQ,
                       err=g.err_estimate, converged=g.converged)


def scaling_identity_check(x: float, y: float, a: float, cfg: EvalConfig | None = None) -> CheckResult:
    """The a-scaled integral equals Gamma(x, y) for every a > 0."""
    cfg = cfg or DEFAULT_CONFIG
    s = bigamma_scaled(x, y, a, cfg)
    g = _bg(x, y, cfg)
    return make_result("scaling_identity", {"x": x, "y": y, "a": a}, s.value, g.value, Relation.EQ,
                       err=s.err_estimate + g.err_estimate, converged=s.converged and g.converged)


def incomplete_additivity_check(x: float, y: float, z: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Gamma(x, y) = Gamma_z(x, y) + Gamma_{1-z}(y, x)."""
    cfg = cfg or DEFAULT_CONFIG
    left = incomplete(x, y, z, cfg)
    right = incomplete(y, x, 1.0 - z, cfg)
    g = _bg(x, y, cfg)
    return make_result("incomplete_additivity", {"x": x, "y": y, "z": z},
                       left.value + right.value, g.value, Relation.EQ,
                       err=left.err_estimate + right.err_estimate + g.err_estimate,
                       converged=left.converged and right.converged and g.converged)


def _ratio_with_err(x, y, z, cfg) -> tuple[float, float, bool]:
    num = incomplete(x, y, z, cfg)
    den = _bg(x, y, cfg)
    value = num.value / den.value
    err = (num.err_estimate + abs(value) * den.err_estimate) / den.value
    return value, err, num.converged and den.converged


def ratio_reflection_check(x: float, y: float, z: float, cfg: EvalConfig | None = None) -> CheckResult:
    """I_z(x, y) = 1 - I_{1-z}(y, x)."""
    cfg = cfg or DEFAULT_CONFIG
    a, a_err, a_ok = _ratio_with_err(x, y, z, cfg)
    b, b_err, b_ok = _ratio_with_err(y, x, 1.0 - z, cfg)
    return make_result("ratio_reflection", {"x": x, "y": y, "z": z}, a, 1.0 - b, Relation.EQ,
                       err=a_err + b_err, converged=a_ok and b_ok, tol=1e-8)


# --------------------------------------------------------------------- suite


@dataclass(frozen=True)
class _CheckSpec:
    func: Callable[..., CheckResult]
    symbols: tuple[str, ...]


CHECKS: dict[str, _CheckSpec] = {
    "lemma1": _CheckSpec(lemma1_check, ("alpha", "x")),
    "quadrant": _CheckSpec(quadrant_check, ("x", "y")),
    "diag": _CheckSpec(diag_check, ("x",)),
    "recip": _CheckSpec(recip_check, ("x",)),
    "beta_compare": _CheckSpec(beta_compare_check, ("x", "y")),
    "reflection_upper": _CheckSpec(reflection_upper_check, ("x",)),
    "reflection_lower": _CheckSpec(reflection_lower_check, ("x",)),
    "jensen": _CheckSpec(jensen_check, ("x", "y")),
    "scaling_ineq": _CheckSpec(scaling_ineq_check, ("x", "y", "a")),
    "corollary_a": _CheckSpec(corollary_a_check, ("x", "y", "a")),
    "gamma_lower": _CheckSpec(gamma_lower_check, ("x", "a")),
    "logconvex": _CheckSpec(logconvex_check, ("x", "y", "p")),
    "hoelder_coeff": _CheckSpec(hoelder_coeff_check, ("m", "n")),
    "symmetry": _CheckSpec(symmetry_check, ("x", "y")),
    "reduction": _CheckSpec(reduction_check, ("x",)),
    "scaling_identity": _CheckSpec(scaling_identity_check, ("x", "y", "a")),
    "incomplete_additivity": _CheckSpec(incomplete_additivity_check, ("x", "y", "z")),
    "ratio_reflection": _CheckSpec(ratio_reflection_check, ("x", "y", "z")),
}


@dataclass(frozen=True)
class GridSpec:
    """Per-symbol value lists; the sweep is their cartesian product.

    ``logconvex`` takes its point pairs from the (x, y) product, as unordered
    pairs, and ``p`` from its own list.
    """

    values: Mapping[str, tuple[float, ...]] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, vs in dict(self.values).items():
            vs = tuple(float(v) for v in vs)
            if any(math.isnan(v) or math.isinf(v) for v in vs):
                raise DomainError(f"grid symbol {k!r} has non-finite values")
            clean[str(k)] = vs
        object.__setattr__(self, "values", clean)

    @classmethod
    def from_string(cls, spec: str) -> "GridSpec":
        """Parse ``"x=0.5,1,2;y=1;p=0.5"``."""
        values = {}
        for chunk in spec.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            key, sep, rest = chunk.partition("=")
            if not sep or not key.strip():
                raise DomainError(f"grid entry {chunk!r} is not of the form symbol=v1,v2,...")
            try:
                vals = tuple(float(v) for v in rest.split(",") if v.strip())
            except ValueError:
                raise DomainError(f"grid entry {chunk!r} has a non-numeric value") from None
            values[key.strip()] = vals
        return cls(values)

    def __getitem__(self, key: str) -> tuple[float, ...]:
        return self.values[key]

    def __contains__(self, key: str) -> bool:
        return key in self.values

    def is_empty(self) -> bool:
        return not any(self.values.values())

    def points_for(self, name: str) -> list[tuple]:
        spec = CHECKS[name]
        if name == "logconvex":
            xy = list(itertools.product(self["x"], self["y"]))
            pairs = [(xy[i], xy[j]) for i in range(len(xy)) for j in range(i, len(xy))]
            return [(p1, p2, p) for p1, p2 in pairs for p in self["p"]]
        if name == "hoelder_coeff":
            return [(int(m), int(n)) for m, n in itertools.product(self["m"], self["n"])]
        return list(itertools.product(*(self[s] for s in spec.symbols)))


DEFAULT_GRID = GridSpec({
    "x": (0.25, 0.5, 0.75, 1, 1.5, 2, 3, 5),
    "y": (0.25, 0.5, 0.75, 1, 1.5, 2, 3, 5),
    "z": (0.1, 0.25, 0.5, 0.75, 0.9),
    "a": (0.25, 0.5, 0.75, 1.5, 2, 4),
    "p": (0, 0.3, 0.5, 0.7, 1),
    "m": (1, 2, 3, 4, 5, 6),
    "n": (1, 2, 3, 4, 5, 6),
    "alpha": (0, 0.5, 1, 2),
})


@dataclass(frozen=True)
class SkippedPoint:
    check: str
    point: tuple
    reason: str


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)
    skipped: list[SkippedPoint] = field(default_factory=list)

    def count(self, verdict: Verdict) -> int:
        return sum(1 for r in self.results if r.verdict is verdict)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.verdict is Verdict.FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "total": len(self.results),
            "pass": self.count(Verdict.PASS),
            "fail": self.count(Verdict.FAIL),
            "inconclusive": self.count(Verdict.INCONCLUSIVE),
            "skipped": len(self.skipped),
        }


def _resolve(which: Iterable[str] | None) -> list[str]:
    names = list(CHECKS) if which is None else list(which)
    for name in names:
        if name not in CHECKS:
            raise UnknownCheckError(name)
    return names


def run_suite(
    grid: GridSpec = DEFAULT_GRID,
    which: Iterable[str] | None = None,
    cfg: EvalConfig | None = None,
    *,
    workers: int = 1,
    fail_fast: bool = False,
) -> SuiteReport:
    """Run the selected checks over every grid point.

    Checks whose symbols are missing from the grid are skipped with a reason,
    as are points that violate a check's precondition.  Results come back in
    check order, then grid order, whatever ``workers`` is.
    """
    names = _resolve(which)
    cfg = cfg or DEFAULT_CONFIG
    report = SuiteReport()
    for name in names:
        spec = CHECKS[name]
        missing = [s for s in spec.symbols if s not in grid or not grid[s]]
        if missing:
            if not grid.is_empty():
                report.skipped.append(SkippedPoint(name, (), f"grid lacks {', '.join(missing)}"))
            continue
        points = grid.points_for(name)

        def run(args, name=name, spec=spec):
            try:
                return spec.func(*args, cfg)
            except DomainError as exc:
                return SkippedPoint(name, tuple(args), str(exc))

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(run, points))
        else:
            outcomes = map(run, points)
        for out in outcomes:
            if isinstance(out, SkippedPoint):
                report.skipped.append(out)
                continue
            report.results.append(out)
            if fail_fast and out.verdict is Verdict.FAIL:
                return report
    return report
