"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for every error raised by extsplash."""


# field construction
class NotPrimePower(GeometryError):
    pass


class ReduciblePolynomial(GeometryError):
    pass


class NonPrimitiveRoot(GeometryError):
    pass


class ZeroRightHandSide(GeometryError):
    pass


# plane
class EqualArguments(GeometryError):
    pass


class DegenerateFrame(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class NotDistinct(GeometryError):
    pass


# splashes
class SecantLine(GeometryError):
    pass


class NotExterior(GeometryError):
    pass


# circle models
class BadParameters(GeometryError):
    pass


class AllZeroParameters(GeometryError):
    pass


class DependentBasis(GeometryError):
    pass


class NoFit(GeometryError):
    pass


# sublines
class NotSpecial(GeometryError):
    pass


class PointNotInSubplane(GeometryError):
    pass


# projections / census
class PointInSubplane(GeometryError):
    pass


class PointOnLine(GeometryError):
    pass


class NoPoint(GeometryError):
    pass


class MultiplePoints(GeometryError):
    pass


class PreconditionViolation(GeometryError):
    pass
