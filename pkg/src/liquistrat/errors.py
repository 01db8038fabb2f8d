"""Exception and warning types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented constraint.

    ``field`` names the offending attribute so callers (and the CLI) can
    report it precisely.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class DomainError(ValueError):
    """A formula is undefined for the given inputs (zero capital, cc <= 0)."""


class InsufficientDataError(ValueError):
    """A statistic needs more observations than the sample holds."""


class UndefinedSkewnessError(ValueError):
    """Skewness requested for a zero-variance sample."""


class DegenerateRateWarning(UserWarning):
    """A computed debt rate is negative; the spread/premium pair is implausible."""
