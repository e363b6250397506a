"""Exception types shared across the package."""


class BeiError(Exception):
    """Base class for all errors raised deliberately by this package."""


class RingError(BeiError):
    """Invalid ring construction or mixing elements of different rings."""


class ParseError(BeiError):
    """Malformed polynomial or graph text.

    Carries the character position where scanning failed, when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UsageError(BeiError):
    """An operation was called with arguments outside its contract."""


class InputError(BeiError):
    """Structurally valid input that violates a precondition (bad graph, zero generator, ...)."""


class NotInClassError(InputError):
    """The input graph is outside the class an ordering or formula applies to."""


class ComputationLimitError(BeiError):
    """A configured cap (pair count, term count) was exceeded before completion."""


class InternalError(BeiError):
    """An internal consistency check failed; indicates a bug, not bad input."""
