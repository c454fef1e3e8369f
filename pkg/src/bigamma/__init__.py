"""
Bigamma: the two-parameter Gamma integral

    Gamma(x, y) = int_0^1 (-ln t)^(x-1) (-ln(1-t))^(y-1) dt,

its incomplete form, the log-log coefficients Gamma_ln(m, n), truncated
series around (1, 1), and a certifier for the known inequalities.
"""

from .checks import CheckResult, Relation, Verdict
from .core import RatioRangeWarning, bigamma, bigamma_scaled, bigamma_unit_interval, incomplete, ratio
from .errors import (
    BigammaError,
    CoverageError,
    DomainError,
    EmptyTableError,
    IntegrandBlowUp,
    RangeError,
    TableError,
    TableParseError,
    TableSchemaError,
    UnknownCheckError,
)
from .gamma_ref import beta, beta_integral, gamma, gamma_deriv_at_one, log_beta, log_gamma
from .loglog import CoeffTable, TableKind, build_table, gamma_ln, load_table, save_table
from .quad import DEFAULT_CONFIG, EvalConfig, QuadResult, integrate_2d, integrate_semi_infinite, tanh_sinh
from .series import SeriesEstimate, beta_series, bigamma_series

__version__ = "0.1.0"

__all__ = [
    "BigammaError",
    "CheckResult",
    "CoeffTable",
    "CoverageError",
    "DEFAULT_CONFIG",
    "DomainError",
    "EmptyTableError",
    "EvalConfig",
    "IntegrandBlowUp",
    "QuadResult",
    "RangeError",
    "RatioRangeWarning",
    "Relation",
    "SeriesEstimate",
    "TableError",
    "TableKind",
    "TableParseError",
    "TableSchemaError",
    "UnknownCheckError",
    "Verdict",
    "beta",
    "beta_integral",
    "beta_series",
    "bigamma",
    "bigamma_scaled",
    "bigamma_series",
    "bigamma_unit_interval",
    "build_table",
    "gamma",
    "gamma_deriv_at_one",
    "gamma_ln",
    "incomplete",
    "integrate_2d",
    "integrate_semi_infinite",
    "load_table",
    "log_beta",
    "log_gamma",
    "ratio",
    "save_table",
    "tanh_sinh",
]
