"""Exception hierarchy shared by every module in the package."""


class CommonCauseError(Exception):
    """Base class for all errors raised by :mod:`commoncause`."""


class ParseError(CommonCauseError, ValueError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class EndpointOutOfRange(CommonCauseError, ValueError):
    pass


class ZeroConditioningEvent(CommonCauseError, ZeroDivisionError):
    pass


class NotPositivelyCorrelated(CommonCauseError):
    pass


class InvalidTarget(CommonCauseError, ValueError):
    pass


class DegenerateDistinctness(CommonCauseError):
    """The carved cause coincides with one of the correlated events."""


class InternalInvariantViolation(CommonCauseError, AssertionError):
    """A condition that the construction guarantees was found false."""


class InvalidWeights(CommonCauseError, ValueError):
    pass


class IndexOutOfRange(CommonCauseError, IndexError):
    pass


class AtomCapExceeded(CommonCauseError):
    pass


class InvalidParameters(CommonCauseError, ValueError):
    pass


class BlockOutOfRange(CommonCauseError, IndexError):
    pass
