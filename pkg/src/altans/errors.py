"""Exception hierarchy shared by all modules."""


class AltanError(Exception):
    """Base class for errors raised by this package."""


class InvalidGraphError(AltanError, ValueError):
    """A graph, root or embedding violates its structural invariants."""


class InvalidPatchError(InvalidGraphError):
    """A plane graph is not a valid patch."""


class SizeGuardError(AltanError):
    """Input exceeds the size an exact search is intended for."""


class CodeWalkError(AltanError):
    """A boundary-edges code does not trace a simple closed lattice walk."""


class LimitExceededError(AltanError):
    """An enumeration produced more items than the caller allowed."""
