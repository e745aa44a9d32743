"""Exception types shared across the package.

The split matters for callers that must map failures to distinct exit
codes: invalid inputs (DomainError and subclasses) versus numeric
breakdown of an otherwise valid computation (NumericFailure).
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BracketError(DomainError):
    """A root bracket does not actually bracket a sign change."""


class NumericFailure(ArithmeticError):
    """A numeric routine could not produce a trustworthy result."""
