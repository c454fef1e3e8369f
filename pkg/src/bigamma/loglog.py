"""
Log-log coefficients and persisted coefficient tables.

    Gamma_ln(m, n) = int_0^1 (ln(-ln t))^(m-1) (ln(-ln(1-t)))^(n-1) dt

These are the Taylor coefficients of Gamma(x, y) at (1, 1).  With
psi_{m,n}(1 - t) = psi_{n,m}(t) the integral folds onto (0, 1/2):
Gamma_ln(m, n) = L(m, n) + L(n, m), L being the integral over (0, 1/2).
The integrand is signed (ln(-ln t) changes sign at t = 1/e).

Table files are plain text::

    #bigamma-coeff-table v1 kind=GAMMA_LN max_m=3 max_n=3 abs_tol=1e-12 rel_tol=1e-10 ...
    1,1,1.0,0.0
    1,2,-0.5772156649015329,5.9e-14
    ...
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator

import numpy as np

from .core import bigamma
from .errors import DomainError, EmptyTableError, TableParseError, TableSchemaError
from .quad import DEFAULT_CONFIG, EvalConfig, QuadResult, sum_to_tolerance, tanh_sinh

__all__ = [
    "TableKind",
    "CoeffTable",
    "gamma_ln",
    "build_table",
    "save_table",
    "load_table",
    "LOGLOG_CAP",
]

LOGLOG_CAP = 20
_MAGIC = "#bigamma-coeff-table"
_VERSION = "v1"


class TableKind(str, enum.Enum):
    GAMMA_LN = "GAMMA_LN"
    BIGAMMA_INT = "BIGAMMA_INT"


def _fold_half(m: int, n: int, cfg: EvalConfig) -> QuadResult:
    def integrand(t):
        out = np.ones_like(t)
        if m > 1:
            out = out * np.log(-np.log(t)) ** (m - 1)
        if n > 1:
            out = out * np.log(-np.log1p(-t)) ** (n - 1)
        return out

    return tanh_sinh(integrand, 0.0, 0.5, cfg)


def gamma_ln(m: int, n: int, cfg: EvalConfig | None = None) -> QuadResult:
    """Gamma_ln(m, n) for integers 1 <= m, n <= 20."""
    cfg = cfg or DEFAULT_CONFIG
    for k in (m, n):
        if int(k) != k or k < 1:
            raise DomainError(f"Gamma_ln needs integer indices >= 1, got ({m}, {n})")
        if k > LOGLOG_CAP:
            raise DomainError(f"Gamma_ln index {k} exceeds the cap {LOGLOG_CAP}")
    m, n = int(m), int(n)
    if m == 1 and n == 1:
        return QuadResult(1.0, 0.0, 0, True)

    def halves(c: EvalConfig):
        c = replace(c, abs_tol=c.abs_tol / 2)
        return [_fold_half(m, n, c), _fold_half(n, m, c)]

    return sum_to_tolerance(halves, cfg)


@dataclass(frozen=True)
class CoeffTable:
    """Immutable grid of coefficients with per-entry error bars.

    ``entries`` maps ``(m, n)`` to ``(value, err)``; ``failed`` lists the
    entries whose quadrature did not converge.
    """

    kind: TableKind
    max_m: int
    max_n: int
    entries: dict[tuple[int, int], tuple[float, float]]
    build_config: EvalConfig = DEFAULT_CONFIG
    failed: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __getitem__(self, key: tuple[int, int]) -> float:
        return self.entries[key][0]

    def __contains__(self, key) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def err(self, m: int, n: int) -> float:
        return self.entries[(m, n)][1]

    def keys(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.entries))

    def max_err(self) -> float:
        return max((e for _, e in self.entries.values()), default=0.0)


def _entry(kind: TableKind, m: int, n: int, cfg: EvalConfig) -> QuadResult:
    if kind is TableKind.GAMMA_LN:
        return gamma_ln(m, n, cfg)
    return bigamma(m, n, cfg)


def build_table(
    kind: TableKind | str,
    max_m: int,
    max_n: int,
    cfg: EvalConfig | None = None,
    *,
    workers: int | None = None,
) -> CoeffTable:
    """Fill every (m, n) with m <= max_m, n <= max_n.

    Only m <= n is computed; the mirror entry reuses it.  Quadrature failures
    do not abort the build: the table is returned with those entries listed in
    ``failed``.
    """
    kind = TableKind(kind)
    cfg = cfg or DEFAULT_CONFIG
    cap = LOGLOG_CAP if kind is TableKind.GAMMA_LN else int(cfg.domain_cap)
    for k in (max_m, max_n):
        if int(k) != k or not 1 <= k <= cap:
            raise DomainError(f"table size must be an integer in [1, {cap}], got {k}")

    wanted = sorted({(min(m, n), max(m, n)) for m in range(1, max_m + 1) for n in range(1, max_n + 1)})
    with ThreadPoolExecutor(max_workers=workers or 1) as pool:
        results = dict(zip(wanted, pool.map(lambda mn: _entry(kind, mn[0], mn[1], cfg), wanted)))

    entries = {}
    failed = set()
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            r = results[(min(m, n), max(m, n))]
            entries[(m, n)] = (r.value, r.err_estimate)
            if not r.converged:
                failed.add((m, n))
    return CoeffTable(kind, max_m, max_n, entries, cfg, frozenset(failed))


def _header(table: CoeffTable) -> str:
    c = table.build_config
    return (
        f"{_MAGIC} {_VERSION} kind={table.kind.value} max_m={table.max_m} max_n={table.max_n} "
        f"abs_tol={c.abs_tol!r} rel_tol={c.rel_tol!r} max_level={c.max_level} "
        f"max_evals={c.max_evals} domain_cap={c.domain_cap!r}"
    )


def save_table(table: CoeffTable, path: str | os.PathLike) -> None:
    lines = [_header(table)]
    for m, n in table.keys():
        value, err = table.entries[(m, n)]
        lines.append(f"{m},{n},{value!r},{err!r}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_header(line: str) -> dict[str, str]:
    parts = line.split()
    if len(parts) < 2 or parts[0] != _MAGIC:
        raise TableParseError(1, f"expected header starting with {_MAGIC!r}")
    if parts[1] != _VERSION:
        raise TableParseError(1, f"unsupported table version {parts[1]!r}")
    fields_ = {}
    for token in parts[2:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise TableParseError(1, f"malformed header field {token!r}")
        fields_[key] = value
    for required in ("kind", "max_m", "max_n", "abs_tol", "rel_tol"):
        if required not in fields_:
            raise TableParseError(1, f"header is missing {required}=")
    return fields_


def load_table(path: str | os.PathLike, kind: TableKind | str | None = None) -> CoeffTable:
    """Read a table written by ``save_table``.

    Raises ``TableParseError`` (with line number) on malformed content and
    ``TableSchemaError`` on kind mismatch, missing entries or a broken
    symmetry mirror.
    """
    with open(path, encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise TableParseError(1, "empty file")
    hdr = _parse_header(lines[0])
    try:
        file_kind = TableKind(hdr["kind"])
    except ValueError:
        raise TableParseError(1, f"unknown kind {hdr['kind']!r}") from None
    if kind is not None and TableKind(kind) is not file_kind:
        raise TableSchemaError(f"expected a {TableKind(kind).value} table, file holds {file_kind.value}")
    try:
        max_m, max_n = int(hdr["max_m"]), int(hdr["max_n"])
        cfg_kwargs = {k: float(hdr[k]) for k in ("abs_tol", "rel_tol", "domain_cap") if k in hdr}
        cfg_kwargs.update({k: int(hdr[k]) for k in ("max_level", "max_evals") if k in hdr})
        cfg = EvalConfig(**cfg_kwargs)
    except (ValueError, DomainError) as exc:
        raise TableParseError(1, f"bad header value: {exc}") from None

    entries: dict[tuple[int, int], tuple[float, float]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise TableParseError(lineno, f"expected 'm,n,value,err', got {line!r}")
        try:
            m, n = int(parts[0]), int(parts[1])
            value, err = float(parts[2]), float(parts[3])
        except ValueError:
            raise TableParseError(lineno, f"cannot parse {line!r}") from None
        if not (1 <= m <= max_m and 1 <= n <= max_n):
            raise TableParseError(lineno, f"entry ({m}, {n}) outside the declared {max_m}x{max_n} grid")
        if (m, n) in entries:
            raise TableParseError(lineno, f"duplicate entry ({m}, {n})")
        entries[(m, n)] = (value, err)

    if not entries:
        raise EmptyTableError(f"{os.fspath(path)}: table has a header but no entries")
    for (m, n), (value, _) in sorted(entries.items()):
        if n <= max_m and m <= max_n:
            mirror = entries.get((n, m))
            if mirror is None:
                raise TableSchemaError(f"entry ({m}, {n}) has no mirror ({n}, {m})")
            if mirror[0] != value:
                raise TableSchemaError(f"entries ({m}, {n}) and ({n}, {m}) differ")
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            if (m, n) not in entries:
                raise TableSchemaError(f"missing entry ({m}, {n})")

    failed = frozenset(k for k, (v, e) in entries.items() if not (e <= cfg.tolerance(v)))
    return CoeffTable(file_kind, max_m, max_n, entries, cfg, failed)
