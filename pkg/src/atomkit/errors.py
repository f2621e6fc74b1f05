"""Exception hierarchy shared by every module."""


class AtomkitError(Exception):
    """Base class for all library errors."""


class InvalidEdge(AtomkitError, ValueError):
    pass


class InvalidVertex(AtomkitError, ValueError):
    pass


class FormatError(AtomkitError, ValueError):
    """Malformed graph6 / DIMACS / JSON input."""


class DisconnectedInput(AtomkitError, ValueError):
    pass


class UnsupportedPattern(AtomkitError, ValueError):
    pass


class UnknownName(AtomkitError, ValueError):
    pass


class NotClique(AtomkitError, ValueError):
    pass


class SizeMismatch(AtomkitError, ValueError):
    pass


class NotCoC6(AtomkitError, ValueError):
    pass


class BoundExceeded(AtomkitError):
    """An exhaustive routine was asked to run above its configured size limit."""


class AtomTooLarge(BoundExceeded):
    pass


class PreconditionUnverified(AtomkitError):
    """A check was invoked on an input whose class membership does not hold."""
