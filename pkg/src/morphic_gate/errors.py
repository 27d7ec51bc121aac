"""Exception hierarchy shared by the engine and the command line."""


class MorphicError(Exception):
    """Base class for every error raised by this package."""


class NonerasingError(MorphicError, ValueError):
    """A morphism image is empty."""


class AlphabetMismatch(MorphicError, ValueError):
    pass


class NotPrimitiveError(MorphicError):
    pass


class NotLeftProperError(MorphicError, ValueError):
    pass


class FiniteSystemError(MorphicError):
    """Every image has length one, so the fixed point is periodic."""


class ContractViolation(MorphicError):
    """An internal guarantee did not hold (a bound was exceeded, etc.)."""


class OrbitCapExceeded(MorphicError):
    def __init__(self, q, cap):
        super().__init__(f"orbit mod {q} did not close within {cap} states")
        self.q = q
        self.cap = cap


class UnknownReturnWord(MorphicError, ValueError):
    def __init__(self, segment):
        super().__init__(f"segment {segment!r} is not a known return word")
        self.segment = segment


class NotStartingWithSeed(MorphicError, ValueError):
    pass


class EigenPreconditionError(MorphicError, ValueError):
    pass
