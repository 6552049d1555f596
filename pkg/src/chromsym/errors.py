"""Exception hierarchy shared by every module of the package."""


class ChromsymError(ValueError):
    """Base class for all errors raised by chromsym."""


class SizeMismatch(ChromsymError):
    pass


class InvalidDyckPath(ChromsymError):
    pass


class InvalidHessenberg(ChromsymError):
    pass


class InvalidAreaSequence(ChromsymError):
    pass


class InvalidPartition(ChromsymError):
    pass


class CoBipartiteViolation(ChromsymError):
    pass


class NotABicoPart(ChromsymError):
    pass


class NotUnitIntervalOrder(ChromsymError):
    pass


class InternalSearchFailure(ChromsymError):
    pass


class IndexOutOfRange(ChromsymError):
    pass


class ZeroPolynomial(ChromsymError):
    pass


class NotSquare(ChromsymError):
    pass


class NotZeroOne(ChromsymError):
    pass


class NotSymmetric(ChromsymError):
    pass


class TooLarge(ChromsymError):
    pass


class DegreeTooSmall(ChromsymError):
    pass


class NegativeCoefficient(ChromsymError):
    pass
