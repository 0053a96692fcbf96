"""Exception hierarchy shared by all tunnelkit modules."""


class TunnelkitError(Exception):
    """Base class for every error raised by tunnelkit."""


class DyckWordError(TunnelkitError, ValueError):
    """A word could not be parsed as a Dyck path.

    ``position`` is the 1-based index of the offending symbol, when known.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class BadSymbol(DyckWordError):
    pass


class UnbalancedWord(DyckWordError):
    pass


class NegativePrefix(DyckWordError):
    pass


class EmptyPath(TunnelkitError, ValueError):
    pass


class ROutOfRange(TunnelkitError, ValueError):
    pass


class CapExceeded(TunnelkitError, ValueError):
    pass


class PermutationError(TunnelkitError, ValueError):
    pass


class PatternTooLong(PermutationError):
    pass


class NotAvoiding321(PermutationError):
    pass


class NotAvoiding132(PermutationError):
    pass


class SeriesError(TunnelkitError, ArithmeticError):
    pass


class UnknownVariable(SeriesError, KeyError):
    pass


class NonInvertibleConstantTerm(SeriesError):
    pass


class ConstantTermNotOne(SeriesError):
    pass


class NotDivisible(SeriesError):
    pass


class FixedPointDivergence(SeriesError):
    pass


class UnknownSuite(TunnelkitError, KeyError):
    pass
