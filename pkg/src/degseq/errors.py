"""Exception types shared across the package.

The CLI maps these onto exit codes: parse errors exit 2, resource limits
exit 3, infeasible or invalid requests exit 4, internal failures exit 5.
"""


class DegseqError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DegseqError, ValueError):
    """Input text could not be parsed."""


class ArgumentError(DegseqError, ValueError):
    """An argument violates a documented precondition."""


class NotGraphicError(ArgumentError):
    """A degree sequence that must be graphic is not."""


class InfeasibleError(DegseqError):
    """No object with the requested properties exists."""


class ResourceLimitError(DegseqError):
    """A computation exceeds the configured exhaustive-search limits."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InternalBugError(DegseqError):
    """A step guaranteed to succeed failed; indicates a bug, not bad input."""
