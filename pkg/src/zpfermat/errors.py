"""Exception types shared across the package."""


class NotSquarefreeError(ValueError):
    """A polynomial (or its reduction mod q) has a repeated factor."""


class InconclusiveError(Exception):
    """The available data cannot decide the question (e.g. q divides disc(f))."""


class NotRepresentableError(ArithmeticError):
    """An element left the working ring Z[theta][1/2]."""


class InvalidContextError(ValueError):
    """A prime context whose defining congruence does not hold."""


class ConsistencyError(RuntimeError):
    """An internal identity that must always hold was violated."""


class TransportError(OSError):
    """Retryable network failure while talking to a remote database."""
