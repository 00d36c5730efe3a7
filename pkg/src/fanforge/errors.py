class FanforgeError(Exception):
    """Base class for library errors."""


class UnknownEdgeError(FanforgeError, KeyError):
    pass


class UnknownVertexError(FanforgeError, KeyError):
    pass


class LoopContractionError(FanforgeError, ValueError):
    """Raised when asked to contract a loop; delete it instead."""


class PreconditionError(FanforgeError, ValueError):
    pass


class WheelInputError(PreconditionError):
    pass


class IdenticalMinorError(PreconditionError):
    pass


class SizeGuardError(FanforgeError):
    pass


class TheoremViolation(FanforgeError, RuntimeError):
    """A construction that the theory guarantees came out wrong.

    Never expected; carries whatever trace the failing step had built.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class SelfCheckError(FanforgeError):
    """A generator's structural self-check failed."""
