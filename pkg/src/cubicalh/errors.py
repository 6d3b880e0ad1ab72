"""Exception hierarchy shared by all modules."""


class CubicalHError(Exception):
    """Base class for every error raised by this package."""


# polynomial arithmetic
class DegreeBoundError(CubicalHError, ValueError):
    pass


class InexactDivisionError(CubicalHError, ArithmeticError):
    pass


# posets
class PosetError(CubicalHError, ValueError):
    pass


class CycleError(PosetError):
    pass


class RedundantEdgeError(PosetError):
    pass


class NotGradedError(PosetError):
    pass


class NotComparableError(PosetError):
    pass


# complexes and subdivisions
class ComplexError(CubicalHError, ValueError):
    pass


class NotPureError(ComplexError):
    pass


class EmptyFaceError(ComplexError):
    pass


class FaceNotFoundError(ComplexError, KeyError):
    pass


class SubdivisionError(CubicalHError, ValueError):
    pass


class TargetNotCubeError(SubdivisionError):
    pass


class NotAVertexError(SubdivisionError):
    pass


class IdentityViolation(CubicalHError):
    """An identity that holds for every valid input failed; the input is corrupt."""


class NonIntegralError(IdentityViolation):
    pass


# incidence algebra
class FormalError(CubicalHError, ValueError):
    pass


class HostMismatchError(FormalError):
    pass


class NotUnitaryError(FormalError):
    pass


class DegreeExceedsRankError(FormalError):
    pass


class NotLocallyGradedError(FormalError):
    pass


class NotLocallyEulerianError(FormalError):
    pass


class InconsistencyError(FormalError):
    pass


class NoMaximumError(FormalError):
    pass


# corpus / io
class UnknownEntryError(CubicalHError, KeyError):
    pass


class ParameterError(CubicalHError, ValueError):
    pass


class ParseError(CubicalHError, ValueError):
    pass
