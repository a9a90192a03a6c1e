"""Exception hierarchy shared by all modules."""


class QKError(Exception):
    """Base class for errors raised by this package."""


class DomainError(QKError, ValueError):
    """Input outside the domain of an operation (exit code 1 in the CLI)."""


class ParseError(DomainError):
    """Malformed textual input."""


class OrderError(DomainError):
    """A containment or Bruhat-order precondition failed."""


class ConsistencyError(QKError, RuntimeError):
    """Two computations that must agree did not (exit code 2 in the CLI)."""
