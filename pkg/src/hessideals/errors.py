"""Exception hierarchy shared by every module of the package."""


class HessError(Exception):
    """Base class for all errors raised by hessideals."""


class VariableCountMismatch(HessError, ValueError):
    pass


class IndexOutOfRange(HessError, IndexError):
    pass


class NotHomogeneous(HessError, ValueError):
    pass


class DegreeTooLow(HessError, ValueError):
    pass


class NotSquare(HessError, ValueError):
    pass


class KOutOfRange(HessError, ValueError):
    pass


class SingularChangeMatrix(HessError, ValueError):
    pass


class ArityMismatch(HessError, ValueError):
    pass


class NotArtinianUpToBound(HessError):
    """Jet colengths never stabilized below the requested truncation bound.

    Usually means the singularity is not isolated, occasionally that the
    bound is simply too small.
    """


class NotAUnit(HessError, ValueError):
    pass


class NotALocalIsomorphism(HessError, ValueError):
    pass


class InsufficientRange(HessError, ValueError):
    pass


class StabilizationNotCertified(HessError):
    pass


class InconsistentThresholds(HessError):
    """ct and mdr + d - 2 disagree; indicates a bug or a non-reduced input."""


class MixedDegrees(HessError, ValueError):
    pass


class CompareKMissing(HessError, KeyError):
    pass


class CorruptFixture(HessError):
    pass
