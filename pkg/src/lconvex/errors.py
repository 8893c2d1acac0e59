"""Exception types shared across the package.

Precondition violations (bad input shape for an operation) derive from
PreconditionError; InternalInconsistency marks a theorem-trap assertion
that fired, which always indicates a bug or an input that slipped past a
guard.
"""


class LConvexError(Exception):
    """Base class for all package errors."""


class ParseError(LConvexError):
    """Input document could not be parsed."""


class EmptyInput(LConvexError):
    """A polyomino needs at least one cell."""


class Disconnected(LConvexError):
    """Cell set is not edge-connected; carries a witness pair."""

    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"cells {a} and {b} lie in different components")


class PreconditionError(LConvexError):
    """An operation was called on input outside its domain."""


class NotConvex(PreconditionError):
    pass


class NotLConvex(PreconditionError):
    pass


class NotFerrer(PreconditionError):
    pass


class NotDescending(PreconditionError):
    """Row vector of a staircase board must be weakly decreasing."""


class NoRealization(LConvexError):
    """No L-convex polyomino has the requested projections."""


class AmbiguousRealization(LConvexError):
    """More than one L-convex realization found; impossible for valid
    unimodal projections, so this is a consistency trap."""


class TooLarge(PreconditionError):
    """Instance exceeds the configured enumeration bound."""


class BoundTooLarge(PreconditionError):
    """Requested enumeration bound exceeds the supported range."""


class DegenerateSizes(PreconditionError):
    """Two-rectangle parameters must satisfy 0 < s < n and 0 < t < m."""


class UnknownFormat(LConvexError):
    pass


class UnknownStyle(LConvexError):
    pass


class InternalInconsistency(LConvexError):
    """Two provably-equivalent computations disagreed."""
