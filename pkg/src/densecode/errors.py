"""Exception types raised at the public API boundary."""


class DenseCodeError(ValueError):
    """Base class for all input-validation failures in this package."""


class NonHermitianInput(DenseCodeError):
    pass


class NotUnitTrace(DenseCodeError):
    pass


class NotAProbabilitySpectrum(DenseCodeError):
    pass


class ParameterOutOfRange(DenseCodeError):
    pass


class InvalidChannelParams(DenseCodeError):
    pass


class InvalidPrior(DenseCodeError):
    pass


class MixedLettersUseMixedOverlap(DenseCodeError):
    """Raised when a pure-state overlap is requested for mixed letters."""


class NotClosed(DenseCodeError):
    """A product of generators is not (a phase times) another generator."""


class IndexOutOfRange(DenseCodeError):
    pass
