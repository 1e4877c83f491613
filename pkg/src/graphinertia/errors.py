"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """Raised when an input violates an operation's precondition."""


class UnsupportedOrder(ValueError):
    """Raised when a graph is larger than an operation is willing to handle."""


class NumericFailure(ArithmeticError):
    """Raised when the floating-point eigensolver fails to converge."""


class InternalError(RuntimeError):
    """An invariant that should be impossible to break was broken."""
