"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class DivergenceError(DomainError):
    """The requested quantity is infinite (e.g. 2F1 at 1 with c - a - b <= 0)."""


class CutoffError(DomainError):
    """Parameters sit exactly on the cut-off surface beta = q/2."""


class BudgetExceededError(RuntimeError):
    """A series did not converge within its term budget.

    The partial sum and the number of terms consumed are kept on the
    exception so callers can inspect how far the summation got.
    """

    def __init__(self, message, partial=None, terms_used=0):
        super().__init__(message)
        self.partial = partial
        self.terms_used = terms_used


class InconclusiveError(RuntimeError):
    """A numerical classification could not decide between candidates."""


class ResolutionError(RuntimeError):
    """A quadrature rule is too coarse for the requested accuracy."""
