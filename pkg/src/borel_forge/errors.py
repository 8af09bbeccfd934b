"""Exception hierarchy shared by all borel_forge modules."""


class BorelForgeError(Exception):
    """Base class for every error raised by this package."""


class WidthMismatch(BorelForgeError, ValueError):
    pass


class DegreeMismatch(BorelForgeError, ValueError):
    pass


class NotBorelComparable(BorelForgeError, ValueError):
    """Raised when a Borel witness is requested for a pair with a >=Bor b false."""


class BudgetExceeded(BorelForgeError, RuntimeError):
    """An enumeration or S-pair budget was exhausted."""


class Unstabilized(BorelForgeError, RuntimeError):
    pass


class InadmissibleHilbertFunction(BorelForgeError, ValueError):
    pass


class CertificateMismatch(BorelForgeError, RuntimeError):
    """Independent generic draws did not agree on a result.

    ``candidates`` holds every value that was produced, in draw order.
    """

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


class HypothesisViolated(BorelForgeError, ValueError):
    pass


class OrientationRequired(BorelForgeError, ValueError):
    pass


class WeightNotFound(BorelForgeError, RuntimeError):
    pass


class UnknownRelation(BorelForgeError, ValueError):
    pass


class ParseError(BorelForgeError, ValueError):
    """Malformed input text; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
