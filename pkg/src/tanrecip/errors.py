"""Exception hierarchy shared by every module."""


class InvalidInputError(ValueError):
    """Argument outside an operation's domain."""


class NotAPrimeError(InvalidInputError):
    pass


class UnsupportedLeadingCoefficientError(InvalidInputError):
    pass


class InconsistencyError(ArithmeticError):
    """An identity that must hold exactly did not. Indicates a bug, never bad input."""


class PoleError(ArithmeticError):
    pass
