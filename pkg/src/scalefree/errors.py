"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class SingularityError(DomainError):
    """Evaluation requested at a singular point (e.g. t = 0 for the generalized solution)."""


class ConvergenceError(RuntimeError):
    """An iteration did not reach its tolerance within the step budget.

    The last state reached is kept on ``state`` so callers can still report it.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state
