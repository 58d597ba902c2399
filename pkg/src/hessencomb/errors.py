"""Exception hierarchy shared by every module."""


class HessencombError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(HessencombError, ValueError):
    pass


class InvalidPermutation(HessencombError, ValueError):
    pass


class NotWeaklyIncreasing(HessencombError, ValueError):
    pass


class ValueOutOfRange(HessencombError, ValueError):
    pass


class Reducible(HessencombError, ValueError):
    """h(i) == i for some i < n; only irreducible varieties are supported."""

    def __init__(self, index, values):
        self.index = index
        self.values = tuple(values)
        super().__init__(
            f"h={self.values} is reducible: h({index}) = {index} < n")


class SizeMismatch(HessencombError, ValueError):
    pass


class IndexOutOfRange(HessencombError, IndexError):
    pass


class BudgetExceeded(HessencombError):
    pass


class NotAcyclic(HessencombError, ValueError):
    pass


class NotAGenerator(HessencombError, ValueError):
    pass


class UnsupportedShape(HessencombError):
    pass


class WrongBasis(HessencombError, TypeError):
    pass


class MissingVertex(HessencombError, KeyError):
    pass


class UnknownSuite(HessencombError, KeyError):
    pass
