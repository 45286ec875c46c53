"""Exception types raised across the package."""


class QuasigroupError(Exception):
    """Base class for all errors raised by quasicrypt."""


# finite fields

class NotPrimeError(QuasigroupError, ValueError):
    pass


class ReducibleModulusError(QuasigroupError, ValueError):
    pass


class NoGeneratorError(QuasigroupError, RuntimeError):
    pass


class ZeroElementError(QuasigroupError, ValueError):
    pass


class FieldDivisionByZero(QuasigroupError, ZeroDivisionError):
    pass


# tables

class ValidationError(QuasigroupError, ValueError):
    pass


class BadShapeError(ValidationError):
    pass


class RowNotPermutationError(ValidationError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} is not a permutation")


class ColNotPermutationError(ValidationError):
    def __init__(self, col):
        self.col = col
        super().__init__(f"column {col} is not a permutation")


class NotPermutationError(ValidationError):
    pass


class ParseError(QuasigroupError, ValueError):
    pass


# analysis

class EmptySetError(QuasigroupError, ValueError):
    pass


class WrongOrderError(QuasigroupError, ValueError):
    pass


class EqualPairError(QuasigroupError, ValueError):
    pass


class NotCoprimeError(QuasigroupError, ValueError):
    pass


class CrossCheckMismatch(QuasigroupError, AssertionError):
    """Two independent routes disagree. Always an implementation bug."""


# construction

class InvalidParamsError(QuasigroupError, ValueError):
    pass


class ZeroGammaError(QuasigroupError, ValueError):
    pass


class NoSuitableCError(QuasigroupError, RuntimeError):
    pass


class NoValidMError(QuasigroupError, ValueError):
    pass


class QTooSmallError(QuasigroupError, ValueError):
    pass
