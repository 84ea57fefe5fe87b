"""Exception types shared across the package.

All argument-validation failures derive from DomainError so callers (and the
CLI) can map them to a single exit path. The more specific subclasses exist
where the failure mode is worth distinguishing programmatically.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvalidQuantityError(DomainError):
    """A physical quantity is non-finite or has an impossible sign."""


class EmptyFileError(DomainError):
    """A byte-level analysis was asked to run on zero bytes."""


class SampleSizeError(DomainError):
    """Not enough data to support the requested estimator honestly."""


class UndefinedTemperatureError(DomainError):
    """A temperature ratio with both numerator and denominator zero."""


class InvalidDistributionError(DomainError):
    """A probability distribution that is not normalized or not a distribution."""
