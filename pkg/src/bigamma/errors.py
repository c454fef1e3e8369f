"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BigammaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BigammaError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(BigammaError, ArithmeticError):
    """A result cannot be represented, or an argument exceeds a configured cap."""


class IntegrandBlowUp(BigammaError, ArithmeticError):
    """The integrand returned a non-finite value at an interior node."""

    def __init__(self, abscissa, value=None):
        self.abscissa = abscissa
        self.value = value
        super().__init__(f"integrand blow-up at abscissa {abscissa!r} (value {value!r})")


class CoverageError(BigammaError, LookupError):
    """A coefficient table does not contain an entry needed by a series."""

    def __init__(self, missing):
        self.missing = missing
        super().__init__(f"coefficient table is missing entry (m, n) = {missing}")


class TableError(BigammaError, ValueError):
    """Base class for coefficient-table persistence errors."""


class TableParseError(TableError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class TableSchemaError(TableError):
    pass


class EmptyTableError(TableSchemaError):
    pass


class UnknownCheckError(BigammaError, KeyError):
    def __str__(self):
        return f"unknown check name: {self.args[0]!r}"
