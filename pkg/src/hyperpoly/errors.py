"""Exception hierarchy.

Every exception carries an ``exit_code`` used by the command-line front end.
"""


class HyperpolyError(Exception):
    exit_code = 2


class ParseError(HyperpolyError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at character {position})"
        super().__init__(message)
        self.position = position


class ZeroPolynomial(HyperpolyError, ValueError):
    def __init__(self, message="operation undefined for the zero polynomial"):
        super().__init__(message)


class ConstantPolynomial(HyperpolyError, ValueError):
    def __init__(self, message="operation requires a nonconstant polynomial"):
        super().__init__(message)


class BothZero(HyperpolyError, ValueError):
    def __init__(self, message="gcd(0, 0) is undefined"):
        super().__init__(message)


class JOutOfRange(HyperpolyError, ValueError):
    pass


class InvalidIsolator(HyperpolyError, ValueError):
    pass


class WindowTooCoarse(HyperpolyError, ValueError):
    pass


class MultipleRootOfF(HyperpolyError):
    """A critical point is also a root of the function (or f has a repeated root)."""

    exit_code = 3

    def __init__(self, message, isolator=None):
        super().__init__(message)
        self.isolator = isolator


class InadmissibleChain(HyperpolyError):
    exit_code = 3

    def __init__(self, j, isolator=None):
        super().__init__(
            f"derivative chain is inadmissible at j = {j}: "
            f"f^({j - 1}) and f^({j}) share a root"
        )
        self.j = j
        self.isolator = isolator


class NoConvergence(HyperpolyError, ArithmeticError):
    exit_code = 4


class AmbiguousClassification(HyperpolyError, ArithmeticError):
    exit_code = 4


class InternalDisagreement(HyperpolyError, AssertionError):
    exit_code = 5

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state
