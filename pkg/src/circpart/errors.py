"""Exception types shared across the package."""


class CircleError(ValueError):
    """Base class for every error raised by circpart."""


class SieveTooSmall(CircleError):
    def __init__(self, needed, bound):
        super().__init__(f"value {needed} exceeds sieve bound {bound}")
        self.needed = needed
        self.bound = bound


class ParseError(CircleError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotPrime(CircleError):
    pass


class EmptyCoP(CircleError):
    pass


class NotAPoint(CircleError):
    pass


class IsCenter(CircleError):
    pass


class BaseMismatch(CircleError):
    pass


class BadResidue(CircleError):
    pass


class WrongBase(CircleError):
    pass


class AxisNotInCoP(CircleError):
    pass


class DegenerateAxis(CircleError):
    pass


class DegenerateTarget(CircleError):
    pass


class PreconditionViolated(CircleError):
    pass


class TooFewAxisPoints(CircleError):
    pass


class TooSmall(CircleError):
    pass


class PrimesNotCovered(CircleError):
    pass


class UnknownSuite(CircleError):
    pass


class BadParams(CircleError):
    pass


class EmptyStructure(CircleError):
    pass
