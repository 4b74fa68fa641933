"""Exception hierarchy shared by every layer of the package."""


class HypoError(Exception):
    """Base class for all errors raised by hypotoeplitz."""


class ParseError(HypoError):
    def __init__(self, position, message):
        self.position = position
        self.message = message
        super().__init__(f"at position {position}: {message}")


class OddAbsolutePower(ParseError):
    pass


class ExactnessViolation(HypoError):
    """An exact code path received a floating (polar) coefficient."""


class NotFixedDegree(HypoError):
    pass


class NegativeDelta(HypoError):
    pass


class PreconditionViolated(HypoError):
    pass


class DenominatorVanishes(HypoError):
    pass


class PoleHit(HypoError):
    pass


class SizeTooSmall(HypoError):
    pass


class ConstructionFailed(HypoError):
    pass


class DegenerateImage(HypoError):
    pass


class UnknownExample(HypoError):
    pass
