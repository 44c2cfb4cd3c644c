"""Exception hierarchy shared by every module."""


class MindistError(Exception):
    """Base class for all library errors."""


class NotPrime(MindistError, ValueError):
    pass


class RankDeficient(MindistError, ValueError):
    pass


class BudgetExceeded(MindistError):
    pass


class UnsupportedField(MindistError, ValueError):
    pass


class ZeroDual(MindistError, ValueError):
    pass


class ColoopPuncture(MindistError, ValueError):
    pass


class ZeroColumn(MindistError, ValueError):
    pass


class DimensionUnderflow(MindistError, ValueError):
    pass


class NotMDS(MindistError, ValueError):
    pass


class NoLinearTerm(MindistError, ValueError):
    pass


class LoopsPresent(MindistError, ValueError):
    pass


class BadRange(MindistError, ValueError):
    pass


class BadCharacteristic(MindistError, ValueError):
    pass


class NotAnIntersectionPoint(MindistError, ValueError):
    pass


class ZeroForm(MindistError, ValueError):
    pass


class ProportionalColumns(MindistError, ValueError):
    pass


class ZeroIdeal(MindistError, ValueError):
    pass


class InsufficientBounds(MindistError):
    pass


class WrongDimension(MindistError, ValueError):
    pass


class BadSupportSize(MindistError, ValueError):
    pass


class ParseError(MindistError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            where += ": "
        super().__init__(where + message)
