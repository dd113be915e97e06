"""Exception types raised by the package."""


class AustrianError(Exception):
    """Base class for every domain error raised here."""


class CapacityViolation(AustrianError, ValueError):
    """A bank or part exceeds what an Austrian partition allows."""


class InternalInconsistency(AustrianError):
    """A result contradicts the closed-form cycle characterization.

    Seeing this means the implementation is wrong, not the mathematics.
    """


class NotACycle(AustrianError, ValueError):
    pass


class NotBalanced(AustrianError, ValueError):
    pass


class DenominatorTooLarge(AustrianError, ValueError):
    pass


class InconsistentTotal(AustrianError, ValueError):
    pass


class TooLarge(AustrianError):
    """The state space exceeds the configured node cap."""


class ParseError(AustrianError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NegativeValue(ParseError):
    pass
