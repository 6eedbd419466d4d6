class WlejaError(Exception):
    pass


class DomainError(WlejaError, ValueError):
    """Argument outside the domain of a formula (non-finite x, alpha <= 1, ...)."""


class NumericalError(WlejaError, ArithmeticError):
    """A numerical procedure failed (bracketing, boundary maximizer, guard band)."""


class BoundaryMaximizerError(NumericalError):
    """A maximizer landed on the edge of the search interval.

    For weighted Leja steps this means the restricted-range margin was too small.
    """

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class ConfigurationError(WlejaError, ValueError):
    pass
