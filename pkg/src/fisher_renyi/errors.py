"""Exception hierarchy shared by every module of the package."""


class DomainError(ValueError):
    """An argument lies outside the admissible domain of an operation."""


class UnsupportedInputError(ValueError):
    """The input is valid in general but not handled by this code path."""


class UnsupportedLambdaError(UnsupportedInputError):
    """No closed form exists for the requested order; use quadrature instead."""


class ConvergenceError(ArithmeticError):
    """Adaptive integration did not reach the requested tolerance.

    ``estimate`` and ``error`` hold the best value found before giving up.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class DivergenceError(ConvergenceError):
    """A functional integral is infinite (or numerically indistinguishable from it)."""


class IntegrabilityError(DivergenceError):
    """Rejected before integration: the integrand is known not to be integrable."""
