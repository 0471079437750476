"""Exception types shared across the package."""


class CicheckError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(CicheckError):
    pass


class DivisionByZero(CicheckError):
    pass


class UnsupportedField(CicheckError):
    pass


class ZeroPolynomial(CicheckError):
    pass


class NotHomogeneous(CicheckError):
    pass


class ConstantPolynomial(CicheckError):
    pass


class ExponentOverflow(CicheckError):
    pass


class NotZeroDimensional(CicheckError):
    pass


class NotMaximal(CicheckError):
    pass


class NotPrimary(CicheckError):
    pass


class NotInIdeal(CicheckError):
    def __init__(self, index, message=None):
        super().__init__(message or f"generator {index} is not in the ideal")
        self.index = index


class DegreeCapExceeded(CicheckError):
    pass


class DuplicatePoint(CicheckError):
    pass


class PrimitiveElementNotFound(CicheckError):
    pass


class CharacteristicObstruction(CicheckError):
    pass


class ParseError(CicheckError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
