"""Exception types shared across the package."""


class QAKnotsError(Exception):
    """Base class for every error raised by qaknots."""


class IndexOutOfRange(QAKnotsError, IndexError):
    pass


class BadSign(QAKnotsError, ValueError):
    pass


class NoSuchEdge(QAKnotsError, KeyError):
    pass


class BadParameter(QAKnotsError, ValueError):
    pass


class UnknownFormula(QAKnotsError, KeyError):
    pass


class Unsupported(QAKnotsError, ValueError):
    pass


class ExactDivisionFailure(QAKnotsError, ArithmeticError):
    """A division inside fraction-free elimination left a remainder.

    Over an integral domain this cannot happen for valid input, so seeing
    it means a bug in the arithmetic layer.
    """


class TooLarge(QAKnotsError, ValueError):
    pass


class PDSyntaxError(QAKnotsError, ValueError):
    pass


class LabelCount(QAKnotsError, ValueError):
    pass


class NonPlanar(QAKnotsError, ValueError):
    pass


class InternalMismatch(QAKnotsError, AssertionError):
    """A check that the family's structure guarantees did not hold."""


class CertificationFailed(QAKnotsError):
    """The search did not find a quasi-alternating certificate.

    This never proves the link is not quasi-alternating: the search only
    explores resolutions of the one diagram it was given.
    """

    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {message}" if message else reason)
