"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`RigaugError`.  Errors that signal a violated input condition derive
from :class:`PreconditionError`; the CLI maps those to exit code 4.
"""

__all__ = [
    "RigaugError",
    "PreconditionError",
    "InvalidPair",
    "NotBiconnected",
    "NotConnected",
    "CleavingPrecondition",
    "EmptySet",
    "NotDependent",
    "AlreadyEdge",
    "PreconditionFailed",
    "NotTreeRepresentable",
    "SpecialCase",
    "NotRigid",
    "Precondition",
    "TooLarge",
    "ParseError",
]


class RigaugError(Exception):
    """Base class for all library errors."""


class PreconditionError(RigaugError):
    """An operation was called on input outside its domain."""


class InvalidPair(PreconditionError):
    """A vertex pair with equal endpoints (or out of range)."""


class NotBiconnected(PreconditionError):
    pass


class NotConnected(PreconditionError):
    pass


class CleavingPrecondition(PreconditionError):
    """The pair has no 3-block (it is a 2-separator, adjacent, or weakly connected)."""


class EmptySet(PreconditionError):
    pass


class NotDependent(PreconditionError):
    """The edge is independent of the given base, so it has no fundamental circuit."""


class AlreadyEdge(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    """The graph is not rigid and totally loose."""


class NotTreeRepresentable(PreconditionError):
    pass


class SpecialCase(PreconditionError):
    """The closure is complete or a 3-connected SNGR graph.

    ``kind`` is ``"Complete"`` or ``"SNGR"``.
    """

    def __init__(self, kind, message=None):
        self.kind = kind
        super().__init__(message or f"special case: {kind}")


class NotRigid(PreconditionError):
    pass


class Precondition(PreconditionError):
    """Generic precondition failure of the chordal routines."""


class TooLarge(RigaugError):
    """An exhaustive oracle was asked to search beyond its size bound."""


class ParseError(RigaugError):
    """Malformed graph or cost file; ``line`` is 1-based (0 if not line-specific)."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line else message)
