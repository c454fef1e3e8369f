"""
Structured verdicts for identity and inequality checks.

A check compares two numbers ``lhs`` and ``rhs`` under a relation.  The
margin is signed so that a satisfied relation gives a non-negative margin:

    GE: lhs - rhs      LE: rhs - lhs      EQ: -|lhs - rhs|

Verdict rule.  When every quadrature behind the two sides converged, the
tolerance is widened to the combined error estimate and the verdict is PASS
or FAIL.  When one of them did not converge the error estimate cannot be
trusted, so the check can only PASS (if the margin survives the estimate) or
end INCONCLUSIVE; it never FAILs on unreliable numbers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

__all__ = ["Relation", "Verdict", "CheckResult", "make_result", "EQ_REL_TOL", "INEQ_ABS_TOL"]

EQ_REL_TOL = 1e-8
INEQ_ABS_TOL = 1e-9


class Relation(str, enum.Enum):
    LE = "LE"
    GE = "GE"
    EQ = "EQ"


class Verdict(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


_SEVERITY = {Verdict.PASS: 0, Verdict.INCONCLUSIVE: 1, Verdict.FAIL: 2}


@dataclass(frozen=True)
class CheckResult:
    """One verdict.

    ``tol`` is the tolerance actually applied (already widened by ``err``
    when the inputs converged), so ``PASS`` always implies
    ``margin >= -tol``.
    """

    name: str
    point: tuple[tuple[str, float], ...]
    lhs: float
    rhs: float
    relation: Relation
    margin: float
    tol: float
    verdict: Verdict
    err: float = 0.0
    converged: bool = True
    note: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def point_dict(self) -> dict[str, float]:
        return dict(self.point)

    def as_record(self) -> dict:
        return {
            "check": self.name,
            "point": {k: v for k, v in self.point},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation.value,
            "margin": self.margin,
            "tol": self.tol,
            "verdict": self.verdict.value,
        }


def signed_margin(lhs: float, rhs: float, relation: Relation) -> float:
    if relation is Relation.GE:
        return lhs - rhs
    if relation is Relation.LE:
        return rhs - lhs
    return -abs(lhs - rhs)


def default_tol(lhs: float, rhs: float, relation: Relation) -> float:
    if relation is Relation.EQ:
        return EQ_REL_TOL * max(abs(lhs), abs(rhs), 1e-300)
    return INEQ_ABS_TOL


def make_result(
    name: str,
    point,
    lhs: float,
    rhs: float,
    relation: Relation | str,
    *,
    err: float = 0.0,
    converged: bool = True,
    tol: float | None = None,
    note: str = "",
    extra: dict | None = None,
) -> CheckResult:
    """Build a CheckResult and decide its verdict."""
    relation = Relation(relation)
    lhs = float(lhs)
    rhs = float(rhs)
    err = float(err)
    if tol is None:
        tol = default_tol(lhs, rhs, relation)
    margin = signed_margin(lhs, rhs, relation)
    if isinstance(point, dict):
        point = tuple(point.items())
    point = tuple((str(k), float(v)) for k, v in point)

    if math.isnan(margin) or math.isnan(err):
        verdict = Verdict.INCONCLUSIVE if not converged else Verdict.FAIL
    elif converged:
        tol = max(tol, err)
        verdict = Verdict.PASS if margin >= -tol else Verdict.FAIL
    else:
        verdict = Verdict.PASS if margin - err >= -tol else Verdict.INCONCLUSIVE
    return CheckResult(name, point, lhs, rhs, relation, margin, tol, verdict,
                       err=err, converged=converged, note=note, extra=extra or {})


def worst(results) -> CheckResult:
    """The result with the most severe verdict, then the smallest margin."""
    return max(results, key=lambda r: (_SEVERITY[r.verdict], -r.margin))
