from __future__ import annotations


class LabError(Exception):
    """Base class for every error raised by chemolab."""


class DomainError(LabError, ValueError):
    """An argument lies outside the mathematical domain of a function."""


class UsageError(LabError, ValueError):
    """A call or command was made with inconsistent arguments."""


class SingularInputError(LabError, ZeroDivisionError):
    """A formula hit a zero denominator.

    ``formula`` names the expression that could not be evaluated.
    """

    def __init__(self, formula: str) -> None:
        super().__init__(f"zero denominator in {formula}")
        self.formula = formula


class InvalidInitialDataError(LabError, ValueError):
    """An initial profile produced a negative sample."""


class ConfigError(LabError):
    """Configuration could not be parsed or violates the schema.

    ``key`` is the dotted path of the offending entry when known.
    """

    def __init__(self, message: str, key: str | None = None) -> None:
        super().__init__(message)
        self.key = key


class InstabilityError(LabError, ArithmeticError):
    """The explicit scheme left its stable regime; consumed as a blow-up signal."""


class NegativityBreachError(InstabilityError):
    """A field value dropped to or below ``-clamp_tol``."""


class NonFiniteValueError(InstabilityError):
    """A field value overflowed to inf or became NaN."""


class TimeStepCollapseError(InstabilityError):
    """The stable time step fell below ``dt_min``."""

    def __init__(self, dt: float, dt_min: float) -> None:
        super().__init__(f"stable dt {dt:.3e} fell below dt_min {dt_min:.3e}")
        self.dt = dt
        self.dt_min = dt_min


class MissingReportError(LabError, RuntimeError):
    """A run finished without a monitor attached, so there is nothing to summarise."""
