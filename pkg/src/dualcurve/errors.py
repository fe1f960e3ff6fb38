"""Exception types shared across the library.

Every deliberate failure raises a subclass of DualityError so callers can
catch library errors without also swallowing programming mistakes.
"""


class DualityError(Exception):
    """Base class for every error this library raises on purpose."""


# geometry

class OriginNotDualizable(DualityError):
    """The origin has no dual line."""


class LineThroughOrigin(DualityError):
    """A line through the origin has no dual point."""


class ParallelLines(DualityError):
    """Two lines do not meet in a single point."""


class OriginNotInvertible(DualityError):
    """The origin has no image under unit-circle inversion."""


# expressions

class ParseError(DualityError):
    """Expression text could not be parsed; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class DomainError(DualityError):
    """Evaluation left the real domain (division by zero, bad power, ...)."""


class NonDifferentiable(DualityError):
    """abs() was differentiated at zero."""


# curves

class DiscontinuousCurve(DualityError):
    """Consecutive pieces do not share an endpoint."""


class EmptyCurve(DualityError):
    """A curve needs at least one piece."""


class LinearArc(DualityError):
    """An expression piece is a straight line; declare a segment instead."""


class CornerSupportUndetermined(DualityError):
    """Neither side of a corner admits supporting lines."""


class DirectionOutsideInterval(DualityError):
    """Requested direction is not in the corner's supporting interval."""


class NonpositiveFactor(DualityError):
    """Curve scaling requires a factor greater than zero."""


class UnknownFamily(DualityError):
    """No builtin curve family has that name."""


class InvalidParam(DualityError):
    """A family parameter is out of range or unrecognized."""


# dualization

class TangentThroughOrigin(DualityError):
    """The tangent line at this parameter passes through the origin."""


class AllSamplesExcluded(DualityError):
    """Every sampled parameter was excluded from dualization."""


class SupportingLineThroughOrigin(DualityError):
    """A corner's supporting line passes through the origin."""


class InflectionPoint(DualityError):
    """Second derivative vanishes; dual curvature is undefined here."""


class ZeroOrdinate(DualityError):
    """y = 0 where a nonzero ordinate is required."""


class DualizationError(DualityError):
    """A piece failed to dualize; carries the source piece index and cause."""

    def __init__(self, source_index: int, cause: DualityError):
        super().__init__(f"piece {source_index}: {type(cause).__name__}: {cause}")
        self.source_index = source_index
        self.cause = cause


# slope-intercept transform

class SlopeOutOfRange(DualityError):
    """Slope lies outside the invertible range."""


class InvalidExponent(DualityError):
    """Exponent parameter outside the valid range (needs p > 1)."""


class InvalidSlope(DualityError):
    """Slope parameter outside the valid range for the closed form."""


class ZeroIntercept(DualityError):
    """Tangent through the origin; no finite dual image."""


class NonInvertibleDerivative(DualityError):
    """The derivative cannot be inverted on the requested range."""


# corpus / input

class UnknownExample(DualityError):
    """No builtin example has that id."""


class SpecFileError(DualityError):
    """A curve description file is malformed; message says where."""
