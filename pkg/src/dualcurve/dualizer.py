"""The dualization engine for piecewise curves.

Smooth arcs map to sampled dual arcs through the tangent-line formula
(u, v) = (-y'/(y - a*y'), 1/(y - a*y')), corners map to straight dual
segments swept out by their supporting lines, and straight segments collapse
to single dual points.  Alongside the mapping itself this module provides
the analytic dual tangent slope, the closed-form membership residual for the
dual curve, the dual second derivative, and the three consistency checks
used throughout the test suite: reflexivity, scaling covariance, and radial
perpendicularity.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from .curves import (
    CornerJoint,
    LinearSegment,
    PiecewiseCurve,
    SmoothArc,
    normalize_direction,
    tangent_line_at,
)
from .errors import (
    AllSamplesExcluded,
    DomainError,
    DualityError,
    DualizationError,
    InflectionPoint,
    LineThroughOrigin,
    NonDifferentiable,
    SlopeOutOfRange,
    SupportingLineThroughOrigin,
    TangentThroughOrigin,
    ZeroOrdinate,
)
from .geometry import VERTICAL, Line, Point, dual_of_line, dual_of_point

TANGENT_ORIGIN_TOL = 1e-10   # relative: |y - a*y'| vs |y| + |a*y'|
INFLECTION_TOL = 1e-12       # |y''| below this has no usable dual curvature
REFINE_FACTOR = 4.0          # bisect sample intervals stretched past this
DEFAULT_SAMPLES = 201


@dataclass(frozen=True)
class DualPiece:
    """The dual image of one input piece or corner joint.

    kind tells the story: a smooth arc dualizes to a "sampled-arc", a corner
    joint to a "segment" (two endpoint samples), a straight segment to an
    "isolated-point" (one sample).  For sampled arcs, params holds the source
    parameter of each sample in traversal order, and gaps lists parameters
    where the tangent passed through the origin and no dual point exists.
    """

    source_index: int
    kind: str
    samples: tuple[Point, ...]
    params: tuple[float, ...] | None = None
    gaps: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in ("sampled-arc", "segment", "isolated-point"):
            raise ValueError(f"unknown dual piece kind {self.kind!r}")
        if self.kind == "sampled-arc":
            if len(self.samples) < 2:
                raise ValueError("a sampled dual arc needs at least 2 samples")
            if self.params is None or len(self.params) != len(self.samples):
                raise ValueError("sampled dual arc must carry one parameter per sample")
        if self.kind == "segment" and len(self.samples) != 2:
            raise ValueError("a dual segment has exactly 2 endpoint samples")
        if self.kind == "isolated-point" and len(self.samples) != 1:
            raise ValueError("an isolated dual point has exactly 1 sample")


@dataclass(frozen=True)
class DualizationResult:
    """Ordered dual pieces, one per input piece and per corner joint."""

    pieces: tuple[DualPiece, ...]
    source: PiecewiseCurve


# ---------------------------------------------------------------------------
# pointwise operations

def dual_point_of_arc(arc: SmoothArc, a: float) -> Point:
    """Dual point of the arc's tangent line at parameter a.

    Equals dual_of_line(tangent_line_at(arc, a)); computed directly from the
    jet as (-y'/(y - a*y'), 1/(y - a*y')).  The excluded configuration, a
    tangent line through the origin, raises TangentThroughOrigin.
    """
    try:
        j = arc.jet(a)
    except (DomainError, NonDifferentiable):
        # vertical tangent at an arc endpoint: the tangent line is x = a
        try:
            return dual_of_line(tangent_line_at(arc, a))
        except LineThroughOrigin as exc:
            raise TangentThroughOrigin(str(exc)) from exc
    w = j.value - a * j.d1
    scale = abs(j.value) + abs(a * j.d1)
    if abs(w) <= TANGENT_ORIGIN_TOL * scale:
        raise TangentThroughOrigin(
            f"tangent at a = {a} passes through the origin (y - a*y' = {w})"
        )
    return Point(-j.d1 / w, 1.0 / w)


def dual_tangent_slope(arc: SmoothArc, a: float) -> float:
    """Slope -a/y(a) of the dual curve's tangent at the dual of parameter a.

    When y(a) = 0 the dual tangent is vertical; the VERTICAL flag (inf) is
    returned rather than an error, since the line itself exists.
    """
    y = arc.value(a)
    if y == 0.0:
        return VERTICAL
    return -a / y


def dual_second_derivative(arc: SmoothArc, a: float) -> float:
    """Second derivative d2v/du2 of the dual curve at the dual of a.

    Computed as (y - a*y')^3 / (y^3 * y''); its sign records how convexity
    transfers to the dual side.
    """
    j = arc.jet(a)
    if abs(j.d2) <= INFLECTION_TOL:
        raise InflectionPoint(f"y'' = {j.d2} at a = {a}: dual curvature undefined")
    if j.value == 0.0:
        raise ZeroOrdinate(f"y(a) = 0 at a = {a}: dual curvature formula undefined")
    w = j.value - a * j.d1
    return (w * w * w) / (j.value ** 3 * j.d2)


def radial_perpendicularity_check(arc: SmoothArc, a: float) -> float:
    """Residual u + y'*v of the dual point against the tangent direction.

    The dual point's position vector is perpendicular to the original
    tangent line, so the residual is algebraically zero; what is returned is
    pure rounding noise.
    """
    p = dual_point_of_arc(arc, a)
    try:
        d1 = arc.jet(a).d1
    except (DomainError, NonDifferentiable):
        # vertical-tangent endpoint: tangent direction is (0, 1)
        return p.y
    return p.x + d1 * p.y


def closed_form_dual_residual(
    arc: SmoothArc,
    dinv,
    q: Point,
    slope_range: tuple[float, float] | None = None,
) -> float:
    """Membership residual of point q against the arc's dual curve.

    dinv must invert the arc's derivative (dinv(y'(a)) = a) on the slope
    range in question.  The residual a*x + y(a)*y - 1 with a = dinv(-x/y)
    vanishes exactly when q lies on the dual curve.
    """
    if q.y == 0.0:
        raise ZeroOrdinate("residual form needs a point with nonzero y")
    m = -q.x / q.y
    if slope_range is not None:
        lo, hi = slope_range
        if not (lo <= m <= hi):
            raise SlopeOutOfRange(
                f"slope {m} outside the inverse-derivative domain [{lo}, {hi}]"
            )
    a = dinv(m)
    return a * q.x + arc.value(a) * q.y - 1.0


# ---------------------------------------------------------------------------
# piece dualization

def dualize_arc(arc: SmoothArc, n_samples: int = DEFAULT_SAMPLES, refine: bool = True) -> DualPiece:
    """Sample the dual of a smooth arc at n_samples uniform parameters.

    Parameters whose tangent passes through the origin are recorded in gaps
    and skipped; the dual curve escapes to infinity there and the piece is
    never bridged across.  One refinement pass bisects parameter intervals
    whose dual-space step exceeds REFINE_FACTOR times the median step, since
    the transformation can stretch parameter speed arbitrarily.
    """
    if n_samples < 2:
        raise ValueError("need at least 2 samples")
    return _dualize_arc_indexed(arc, 0, n_samples, refine)


def _dualize_arc_indexed(arc: SmoothArc, index: int, n_samples: int, refine: bool) -> DualPiece:
    step = (arc.x_end - arc.x_start) / (n_samples - 1)
    entries: list[tuple[float, Point | None]] = []
    for k in range(n_samples):
        a = arc.x_end if k == n_samples - 1 else arc.x_start + k * step
        try:
            entries.append((a, dual_point_of_arc(arc, a)))
        except TangentThroughOrigin:
            entries.append((a, None))

    kept = sum(1 for _, p in entries if p is not None)
    if kept == 0:
        raise AllSamplesExcluded(
            f"every tangent line of the arc over [{arc.x_lo}, {arc.x_hi}] "
            "passes through the origin"
        )
    if kept == 1:
        raise AllSamplesExcluded(
            "all but one sample excluded; no dual arc can be formed"
        )

    if refine:
        entries = _refine_once(arc, entries)

    samples = tuple(p for _, p in entries if p is not None)
    params = tuple(a for a, p in entries if p is not None)
    gaps = tuple(a for a, p in entries if p is None)
    return DualPiece(source_index=index, kind="sampled-arc", samples=samples, params=params, gaps=gaps)


def _refine_once(arc: SmoothArc, entries: list[tuple[float, Point | None]]) -> list[tuple[float, Point | None]]:
    dists = [
        p0.dist(p1)
        for (_, p0), (_, p1) in zip(entries, entries[1:])
        if p0 is not None and p1 is not None
    ]
    if not dists:
        return entries
    threshold = REFINE_FACTOR * statistics.median(dists)
    refined: list[tuple[float, Point | None]] = []
    for (a0, p0), (a1, p1) in zip(entries, entries[1:]):
        refined.append((a0, p0))
        if p0 is None or p1 is None or p0.dist(p1) <= threshold:
            continue
        mid = 0.5 * (a0 + a1)
        try:
            refined.append((mid, dual_point_of_arc(arc, mid)))
        except TangentThroughOrigin:
            refined.append((mid, None))
    refined.append(entries[-1])
    return refined


def dualize_corner(j: CornerJoint, index: int = 0) -> DualPiece:
    """Dual segment of a corner: the duals of its supporting lines.

    Every supporting line passes through the corner point, so every dual
    point lies on the corner point's own dual line; the extreme directions
    give the segment endpoints, the one adjacent to the preceding piece
    first.
    """
    if j.at.x == 0.0 and j.at.y == 0.0:
        raise SupportingLineThroughOrigin(
            "corner at the origin: every supporting line contains the origin"
        )
    theta_origin = normalize_direction(math.atan2(j.at.y, j.at.x))
    if j.dir_interval.contains(theta_origin, tol=1e-12):
        raise SupportingLineThroughOrigin(
            f"supporting direction {theta_origin} gives a line through the origin"
        )
    first = Line.from_point_direction(j.at, j.dir_interval.start)
    second = Line.from_point_direction(j.at, j.dir_interval.start + j.dir_interval.sweep)
    return DualPiece(
        source_index=index,
        kind="segment",
        samples=(dual_of_line(first), dual_of_line(second)),
    )


def dualize_segment(s: LinearSegment, index: int = 0) -> DualPiece:
    """Isolated dual point of a straight piece: the dual of its carrier line."""
    carrier = s.carrier_line()
    return DualPiece(source_index=index, kind="isolated-point", samples=(dual_of_line(carrier),))


def dualize_curve(
    curve: PiecewiseCurve,
    n_samples: int = DEFAULT_SAMPLES,
    refine: bool = True,
) -> DualizationResult:
    """Dualize every piece and corner joint in traversal order.

    Piece failures are re-raised as DualizationError carrying the index of
    the offending source piece.
    """
    pieces: list[DualPiece] = []
    for i, piece in enumerate(curve.pieces):
        try:
            if isinstance(piece, SmoothArc):
                pieces.append(_dualize_arc_indexed(piece, i, n_samples, refine))
            else:
                pieces.append(dualize_segment(piece, i))
            joint = curve.joint_after(i)
            if joint is not None:
                pieces.append(dualize_corner(joint, i))
        except DualizationError:
            raise
        except DualityError as exc:
            raise DualizationError(i, exc) from exc
    return DualizationResult(pieces=tuple(pieces), source=curve)


# ---------------------------------------------------------------------------
# whole-curve consistency checks

def _line_point_distance(line: Line, p: Point) -> float:
    return abs(line.membership(p)) / math.hypot(line.a, line.b)


def reflexivity_roundtrip(curve: PiecewiseCurve, n_samples: int = DEFAULT_SAMPLES) -> float:
    """Dualize twice and measure the worst distance back to the original.

    Sampled dual arcs are re-dualized pointwise through tangent lines built
    from the analytic dual slope -a/y(a), avoiding stacked finite-difference
    error; corner dual segments re-dualize through their carrier lines back
    to the corner point; isolated dual points re-dualize to the original
    carrier line, measured against the segment endpoints.
    """
    result = dualize_curve(curve, n_samples, refine=False)
    worst = 0.0
    for dp in result.pieces:
        src = curve.pieces[dp.source_index]
        if dp.kind == "sampled-arc":
            arc = src
            for a, q in zip(dp.params, dp.samples):
                slope = dual_tangent_slope(arc, a)
                back = dual_of_line(Line.from_point_slope(q, slope))
                worst = max(worst, back.dist(Point(a, arc.value(a))))
        elif dp.kind == "segment":
            joint = curve.joint_after(dp.source_index)
            carrier = Line.through_points(dp.samples[0], dp.samples[1])
            worst = max(worst, dual_of_line(carrier).dist(joint.at))
        else:
            original_carrier = dual_of_point(dp.samples[0])
            for endpoint in (src.p_start, src.p_end):
                worst = max(worst, _line_point_distance(original_carrier, endpoint))
    return worst


def scaling_covariance_check(
    curve: PiecewiseCurve, factor: float, n_samples: int = DEFAULT_SAMPLES
) -> float:
    """Deviation between dual-of-scaled and (1/factor)-scaled dual.

    Dilating the curve by factor contracts its dual by 1/factor; both sides
    are sampled with the same plan (no refinement, so sample indices align)
    and compared pointwise.
    """
    from .curves import scale_curve

    base = dualize_curve(curve, n_samples, refine=False)
    scaled = dualize_curve(scale_curve(curve, factor), n_samples, refine=False)
    if len(base.pieces) != len(scaled.pieces):
        raise DualityError("piece structure changed under scaling")
    worst = 0.0
    for dp_base, dp_scaled in zip(base.pieces, scaled.pieces):
        if dp_base.kind != dp_scaled.kind or len(dp_base.samples) != len(dp_scaled.samples):
            raise DualityError("sample alignment lost under scaling")
        for p, q in zip(dp_base.samples, dp_scaled.samples):
            worst = max(worst, q.dist(Point(p.x / factor, p.y / factor)))
    return worst
