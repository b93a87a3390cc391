"""Exception types shared across the library."""


class QilabError(Exception):
    """Base class for all library errors."""


class RangeError(QilabError):
    """Argument outside the supported numerical range (overflow would occur)."""


class ResolutionError(QilabError):
    """A grid is too coarse to resolve the semiclassical scales it must carry."""


class ConvergenceError(QilabError):
    """A quadrature or mesh refinement failed its convergence (ratio) test."""

    def __init__(self, message: str, achieved_error: float | None = None):
        super().__init__(message)
        self.achieved_error = achieved_error


class DegenerateError(QilabError):
    """Linearization has an (almost) zero eigenvalue; classification refused."""


class ConfigError(QilabError):
    """Run configuration failed validation; names the field and constraint."""

    def __init__(self, field: str, constraint: str):
        super().__init__(f"config field '{field}': {constraint}")
        self.field = field
        self.constraint = constraint
