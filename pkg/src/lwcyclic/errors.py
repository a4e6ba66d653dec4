"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the real domain of an operation."""


class DegeneratePointError(ValueError):
    """The tangent vectors do not span a non-degenerate plane."""


class NonSpacelikeError(ValueError):
    """The induced metric is not Riemannian at a requested point."""


class IntegrationError(RuntimeError):
    """Initial-value integration failed before covering its span.

    ``reached`` holds the (start, stop) interval actually integrated.
    """

    def __init__(self, message, reached=None):
        super().__init__(message)
        self.reached = reached


class ConditioningError(ValueError):
    """A least-squares fit is too ill-conditioned to trust."""


class MissingSymbolError(KeyError):
    """A closed-form evaluator was not given one of its inputs."""

    def __init__(self, formula, symbol):
        super().__init__(f"{formula} needs input {symbol!r}")
        self.formula = formula
        self.symbol = symbol

    def __str__(self):
        return self.args[0]
