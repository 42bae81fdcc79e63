"""Exception hierarchy shared by every module.

Domain errors map to CLI exit code 1, budget exhaustion to 2, I/O to 3.
"""


class CoverIdealError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class GraphError(CoverIdealError, ValueError):
    pass


class InvalidVertexError(GraphError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class EnumerationOverflow(CoverIdealError):
    """An enumeration produced more results than the configured cap."""


class TooLargeError(CoverIdealError):
    """Input exceeds the size cap of an exhaustive routine."""


class IdealError(CoverIdealError, ValueError):
    pass


class RingMismatchError(IdealError):
    pass


class ComplexError(CoverIdealError, ValueError):
    pass


class CertificateError(CoverIdealError, ValueError):
    """A certificate failed re-validation or does not match its target."""


class BudgetExceeded(CoverIdealError):
    """A search ran out of nodes or wall time before reaching a verdict.

    Never a refutation: the question is left open.
    """

    exit_code = 2

    def __init__(self, message, nodes=None, seconds=None):
        super().__init__(message)
        self.nodes = nodes
        self.seconds = seconds


class FormatError(CoverIdealError, ValueError):
    """Malformed JSON or text input."""
