"""Dual curves of piecewise-smooth plane curves under point-line duality.

The dual of the point (a, b), with (a, b) not the origin, is the line
a x + b y = 1, and the dual of that line is the point (a, b) again.  This
package applies the transformation to whole curves: smooth pieces map to
smooth pieces, corners map to straight segments, straight segments collapse
to single points.  It also provides the circle-inversion construction of
the dual point, the Legendre transformation bridge for convex arcs, golden
reference examples and a command line interface.
"""

from .errors import (
    AllSamplesExcluded,
    CornerSupportUndetermined,
    DirectionOutsideInterval,
    DiscontinuousCurve,
    DomainError,
    DualityError,
    DualizationError,
    EmptyCurve,
    InflectionPoint,
    InvalidParam,
    LinearArc,
    LineThroughOrigin,
    NonDifferentiable,
    NonInvertibleDerivative,
    NonpositiveFactor,
    OriginNotDualizable,
    OriginNotInvertible,
    ParallelLines,
    ParseError,
    SlopeOutOfRange,
    SpecFileError,
    SupportingLineThroughOrigin,
    TangentThroughOrigin,
    UnknownExample,
    UnknownFamily,
    ZeroIntercept,
    ZeroOrdinate,
)
from .geometry import (
    ORIGIN,
    AngleMeasure,
    Line,
    Point,
    angle_tangent_between,
    dual_by_inversion,
    dual_of_line,
    dual_of_point,
    foot_of_perpendicular,
    intersect_lines,
    invert_in_unit_circle,
    parallel_dual_carrier,
)
from .expr import Jet2, eval_jet2, eval_value, parse_expression, to_source
from .curves import (
    CornerJoint,
    DirectionArc,
    LinearSegment,
    PiecewiseCurve,
    SmoothArc,
    build_piecewise_curve,
    corner_supporting_lines,
    make_family,
    scale_curve,
    tangent_line_at,
)
from .dualizer import (
    DualPiece,
    DualizationResult,
    closed_form_dual_residual,
    dual_point_of_arc,
    dual_second_derivative,
    dual_tangent_slope,
    dualize_arc,
    dualize_corner,
    dualize_curve,
    dualize_segment,
    radial_perpendicularity_check,
    reflexivity_roundtrip,
    scaling_covariance_check,
)
from .legendre import (
    InvertibleArc,
    LegendrePoint,
    bridge_to_dual,
    invertible_pnorm_arc,
    involution_check,
    legendre_at,
    legendre_pnorm_closed_form,
)
from .corpus import GoldenExample, GoldenReport, golden_check, make_example

__version__ = "0.1.0"

__all__ = [
    "AllSamplesExcluded",
    "AngleMeasure",
    "CornerJoint",
    "CornerSupportUndetermined",
    "DirectionArc",
    "DirectionOutsideInterval",
    "DiscontinuousCurve",
    "DomainError",
    "DualPiece",
    "DualityError",
    "DualizationError",
    "DualizationResult",
    "EmptyCurve",
    "GoldenExample",
    "GoldenReport",
    "InflectionPoint",
    "InvalidParam",
    "InvertibleArc",
    "Jet2",
    "LegendrePoint",
    "Line",
    "LineThroughOrigin",
    "LinearArc",
    "LinearSegment",
    "NonDifferentiable",
    "NonInvertibleDerivative",
    "NonpositiveFactor",
    "ORIGIN",
    "OriginNotDualizable",
    "OriginNotInvertible",
    "ParallelLines",
    "ParseError",
    "PiecewiseCurve",
    "Point",
    "SlopeOutOfRange",
    "SmoothArc",
    "SpecFileError",
    "SupportingLineThroughOrigin",
    "TangentThroughOrigin",
    "UnknownExample",
    "UnknownFamily",
    "ZeroIntercept",
    "ZeroOrdinate",
    "angle_tangent_between",
    "bridge_to_dual",
    "build_piecewise_curve",
    "closed_form_dual_residual",
    "corner_supporting_lines",
    "dual_by_inversion",
    "dual_of_line",
    "dual_of_point",
    "dual_point_of_arc",
    "dual_second_derivative",
    "dual_tangent_slope",
    "dualize_arc",
    "dualize_corner",
    "dualize_curve",
    "dualize_segment",
    "eval_jet2",
    "eval_value",
    "foot_of_perpendicular",
    "golden_check",
    "intersect_lines",
    "invert_in_unit_circle",
    "invertible_pnorm_arc",
    "involution_check",
    "legendre_at",
    "legendre_pnorm_closed_form",
    "make_example",
    "make_family",
    "parallel_dual_carrier",
    "parse_expression",
    "radial_perpendicularity_check",
    "reflexivity_roundtrip",
    "scale_curve",
    "scaling_covariance_check",
    "tangent_line_at",
    "to_source",
]
