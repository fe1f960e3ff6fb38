"""Piecewise plane curves: smooth graph arcs, straight segments, corners.

A curve is an ordered chain of pieces traversed start to end.  Smooth pieces
are graphs y(x) given by an expression; straight portions must be declared as
segments.  Corners are detected automatically wherever one-sided tangent
directions disagree, and each corner stores the closed interval of supporting
line directions as an arc on the direction circle (angles mod pi), so corners
whose supporting cone crosses the vertical direction are represented exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import expr as ex
from .errors import (
    CornerSupportUndetermined,
    DirectionOutsideInterval,
    DiscontinuousCurve,
    DomainError,
    DualityError,
    EmptyCurve,
    InvalidParam,
    LinearArc,
    NonDifferentiable,
    NonpositiveFactor,
    UnknownFamily,
)
from .geometry import Line, Point

CONTINUITY_TOL = 1e-10       # max endpoint mismatch between consecutive pieces
CORNER_DIRECTION_TOL = 1e-9  # one-sided direction mismatch that makes a corner
_VALIDATION_PROBES = 16      # interior points probed per arc at build time

HALF_PI = math.pi / 2.0


def normalize_direction(theta: float) -> float:
    """Map any angle to the direction representative in (-pi/2, pi/2]."""
    t = math.fmod(theta, math.pi)
    if t <= -HALF_PI:
        t += math.pi
    elif t > HALF_PI:
        t -= math.pi
    return t + 0.0


def direction_distance(t1: float, t2: float) -> float:
    """Distance between two directions on the circle of angles mod pi."""
    return abs(((t2 - t1 + HALF_PI) % math.pi) - HALF_PI)


@dataclass(frozen=True)
class DirectionArc:
    """A swept interval of directions, from start through start + sweep.

    start lies in (-pi/2, pi/2]; sweep is signed with |sweep| < pi, so the
    interval can pass through the vertical direction without wrapping issues.
    """

    start: float
    sweep: float

    def __post_init__(self):
        if not (-HALF_PI < self.start <= HALF_PI):
            raise ValueError("direction arc start must be normalized to (-pi/2, pi/2]")
        if not abs(self.sweep) < math.pi:
            raise ValueError("direction arc sweep must satisfy |sweep| < pi")

    @property
    def end(self) -> float:
        return normalize_direction(self.start + self.sweep)

    @property
    def midpoint(self) -> float:
        return self.start + self.sweep / 2.0

    def contains(self, theta: float, tol: float = 1e-12) -> bool:
        if self.sweep >= 0.0:
            d = (theta - self.start) % math.pi
            return d <= self.sweep + tol or d >= math.pi - tol
        d = (self.start - theta) % math.pi
        return d <= -self.sweep + tol or d >= math.pi - tol


@dataclass(frozen=True)
class SmoothArc:
    """A graph piece y = f(x) traversed from x_start to x_end.

    The expression must be twice differentiable with finite jets on the open
    interval; endpoints may have vertical tangents (the jets may blow up
    there, and downstream code falls back to the vertical tangent line).
    Arcs with an isolated inflection must be flagged inflectional.
    """

    expr: ex.ExprNode
    x_start: float
    x_end: float
    params: dict[str, float] | None = None
    inflectional: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.x_start) and math.isfinite(self.x_end)):
            raise ValueError("arc domain must be finite")
        if self.x_start == self.x_end:
            raise ValueError("arc domain is a single point")

    @property
    def x_lo(self) -> float:
        return min(self.x_start, self.x_end)

    @property
    def x_hi(self) -> float:
        return max(self.x_start, self.x_end)

    @property
    def span(self) -> float:
        return self.x_hi - self.x_lo

    def jet(self, a: float) -> ex.Jet2:
        return ex.eval_jet2(self.expr, a, self.params)

    def value(self, a: float) -> float:
        return ex.eval_value(self.expr, a, self.params)

    def start_point(self) -> Point:
        return Point(self.x_start, self.value(self.x_start))

    def end_point(self) -> Point:
        return Point(self.x_end, self.value(self.x_end))


@dataclass(frozen=True)
class LinearSegment:
    """A straight piece from p_start to p_end."""

    p_start: Point
    p_end: Point

    def __post_init__(self):
        if self.p_start.x == self.p_end.x and self.p_start.y == self.p_end.y:
            raise ValueError("segment endpoints coincide")

    def direction(self) -> float:
        return normalize_direction(
            math.atan2(self.p_end.y - self.p_start.y, self.p_end.x - self.p_start.x)
        )

    def carrier_line(self) -> Line:
        return Line.through_points(self.p_start, self.p_end)


CurvePiece = SmoothArc | LinearSegment


@dataclass(frozen=True)
class CornerJoint:
    """A corner between piece after_piece and its successor.

    dir_interval sweeps from the one-sided tangent direction of the preceding
    piece to that of the following piece, through the supporting side: every
    direction in the interval yields a line that keeps the curve locally on
    one side.
    """

    at: Point
    dir_interval: DirectionArc
    after_piece: int


@dataclass(frozen=True)
class PiecewiseCurve:
    pieces: tuple[CurvePiece, ...]
    joints: tuple[CornerJoint, ...]
    closed: bool

    def joint_after(self, piece_index: int) -> CornerJoint | None:
        for j in self.joints:
            if j.after_piece == piece_index:
                return j
        return None


# ---------------------------------------------------------------------------
# piece geometry helpers

def piece_endpoints(piece: CurvePiece) -> tuple[Point, Point]:
    if isinstance(piece, SmoothArc):
        return piece.start_point(), piece.end_point()
    return piece.p_start, piece.p_end


def _endpoint_slope_is_vertical(arc: SmoothArc, a: float) -> bool:
    """Probe whether a jet failure at an arc endpoint is a vertical tangent.

    Looks at slopes on shrinking insets toward the interior; a vertical
    tangent shows steadily diverging magnitudes.  Curves flatter than roughly
    |x|^(1/1.3) near the endpoint fall below the growth test and are reported
    as genuine failures instead.
    """
    inward = 1.0 if abs(a - arc.x_lo) <= abs(a - arc.x_hi) else -1.0
    mags = []
    for h in (1e-6, 1e-7, 1e-8):
        try:
            mags.append(abs(arc.jet(a + inward * h * arc.span).d1))
        except DualityError:
            return False
    return mags[2] >= 300.0 and mags[1] >= 1.5 * mags[0] and mags[2] >= 1.5 * mags[1]


def _arc_end_direction(arc: SmoothArc, a: float) -> float:
    try:
        return math.atan(arc.jet(a).d1)
    except (DomainError, NonDifferentiable):
        if _endpoint_slope_is_vertical(arc, a):
            return HALF_PI
        raise


def piece_direction(piece: CurvePiece, at_end: bool) -> float:
    """One-sided tangent direction at the traversal start or end of a piece."""
    if isinstance(piece, SmoothArc):
        return _arc_end_direction(piece, piece.x_end if at_end else piece.x_start)
    return piece.direction()


def tangent_line_at(arc: SmoothArc, a: float) -> Line:
    """Tangent line of the arc at parameter a.

    Interior parameters use the jet; at an endpoint with a vertical tangent
    the line x = a is returned instead of failing.
    """
    tol = 1e-12 * (1.0 + arc.span)
    if a < arc.x_lo - tol or a > arc.x_hi + tol:
        raise DomainError(f"parameter {a} outside arc domain [{arc.x_lo}, {arc.x_hi}]")
    try:
        j = arc.jet(a)
    except (DomainError, NonDifferentiable):
        at_endpoint = min(abs(a - arc.x_lo), abs(a - arc.x_hi)) <= tol
        if at_endpoint and _endpoint_slope_is_vertical(arc, a):
            return Line.vertical(a)
        raise
    return Line.from_point_slope(Point(a, j.value), j.d1)


def corner_supporting_lines(joint: CornerJoint, theta: float) -> Line:
    """The supporting line of the corner in direction theta."""
    if not joint.dir_interval.contains(theta, tol=1e-12):
        raise DirectionOutsideInterval(
            f"direction {theta} not in the corner's supporting interval"
        )
    return Line.from_point_direction(joint.at, theta)


# ---------------------------------------------------------------------------
# building

def _validate_arc(arc: SmoothArc, index: int) -> None:
    span = arc.x_hi - arc.x_lo
    d2s = []
    for k in range(1, _VALIDATION_PROBES + 1):
        a = arc.x_lo + span * k / (_VALIDATION_PROBES + 1)
        try:
            j = arc.jet(a)
        except DualityError as exc:
            raise DomainError(f"piece {index}: arc not evaluable at interior x = {a}: {exc}") from exc
        if not (math.isfinite(j.value) and math.isfinite(j.d1) and math.isfinite(j.d2)):
            raise DomainError(f"piece {index}: non-finite jet at interior x = {a}")
        d2s.append(j.d2)
    if not arc.inflectional and any(d2 == 0.0 for d2 in d2s):
        raise LinearArc(
            f"piece {index}: second derivative vanishes on the sampled interior; "
            "declare a straight piece as a segment, or flag the arc inflectional"
        )


def _probe_points(piece: CurvePiece, at_start: bool) -> list[Point]:
    pts = []
    for f in (1e-3, 1e-2, 5e-2):
        if isinstance(piece, SmoothArc):
            a0 = piece.x_start if at_start else piece.x_end
            a1 = piece.x_end if at_start else piece.x_start
            a = a0 + f * (a1 - a0)
            pts.append(Point(a, piece.value(a)))
        else:
            p0 = piece.p_start if at_start else piece.p_end
            p1 = piece.p_end if at_start else piece.p_start
            pts.append(Point(p0.x + f * (p1.x - p0.x), p0.y + f * (p1.y - p0.y)))
    return pts


def _corner_interval(
    at: Point, th_in: float, th_out: float, prev_piece: CurvePiece, next_piece: CurvePiece
) -> DirectionArc:
    """Choose the sweep between the one-sided directions on the supporting side."""
    probes = _probe_points(prev_piece, at_start=False) + _probe_points(next_piece, at_start=True)
    base = (th_out - th_in) % math.pi
    start = normalize_direction(th_in)
    for sweep in (base, base - math.pi):
        mid = start + sweep / 2.0
        line = Line.from_point_direction(at, mid)
        residuals = [line.membership(p) for p in probes]
        if all(r > 0.0 for r in residuals) or all(r < 0.0 for r in residuals):
            return DirectionArc(start, sweep)
    raise CornerSupportUndetermined(
        f"no supporting side found for the corner at ({at.x}, {at.y})"
    )


def build_piecewise_curve(pieces: list[CurvePiece], closed: bool = False) -> PiecewiseCurve:
    """Validate pieces, check continuity, and detect corners.

    Consecutive pieces must share an endpoint within CONTINUITY_TOL; for a
    closed curve the last piece must also return to the first.  A corner
    joint is created at every junction whose one-sided tangent directions
    differ by more than CORNER_DIRECTION_TOL.
    """
    if not pieces:
        raise EmptyCurve("cannot build a curve from zero pieces")
    for i, piece in enumerate(pieces):
        if isinstance(piece, SmoothArc):
            _validate_arc(piece, i)

    ends = [piece_endpoints(p) for p in pieces]
    njunctions = len(pieces) - 1 + (1 if closed else 0)
    for i in range(njunctions):
        k = (i + 1) % len(pieces)
        gap = ends[i][1].dist(ends[k][0])
        if gap > CONTINUITY_TOL:
            raise DiscontinuousCurve(
                f"pieces {i} and {k} do not meet: endpoint gap {gap:.3e}"
            )

    joints = []
    for i in range(njunctions):
        k = (i + 1) % len(pieces)
        th_in = piece_direction(pieces[i], at_end=True)
        th_out = piece_direction(pieces[k], at_end=False)
        if direction_distance(th_in, th_out) <= CORNER_DIRECTION_TOL:
            continue
        at = ends[i][1]
        joints.append(
            CornerJoint(
                at=at,
                dir_interval=_corner_interval(at, th_in, th_out, pieces[i], pieces[k]),
                after_piece=i,
            )
        )
    return PiecewiseCurve(pieces=tuple(pieces), joints=tuple(joints), closed=closed)


# ---------------------------------------------------------------------------
# scaling

def scale_curve(curve: PiecewiseCurve, factor: float) -> PiecewiseCurve:
    """The curve dilated about the origin by factor > 0."""
    if not (math.isfinite(factor) and factor > 0.0):
        raise NonpositiveFactor(f"scale factor must be a positive real, got {factor}")
    scaled: list[CurvePiece] = []
    lam = ex.Const(factor)
    for piece in curve.pieces:
        if isinstance(piece, SmoothArc):
            # y(x) becomes factor * y(x / factor)
            inner = ex.substitute_var(piece.expr, ex.BinOp("/", ex.Var(), lam))
            scaled.append(
                replace(
                    piece,
                    expr=ex.BinOp("*", lam, inner),
                    x_start=piece.x_start * factor,
                    x_end=piece.x_end * factor,
                )
            )
        else:
            scaled.append(
                LinearSegment(
                    Point(piece.p_start.x * factor, piece.p_start.y * factor),
                    Point(piece.p_end.x * factor, piece.p_end.y * factor),
                )
            )
    return build_piecewise_curve(scaled, closed=curve.closed)


# ---------------------------------------------------------------------------
# builtin families

def _arc(src: str, x_start: float, x_end: float, params: dict[str, float] | None = None) -> SmoothArc:
    return SmoothArc(ex.parse_expression(src), x_start, x_end, params)


def _seg(x0: float, y0: float, x1: float, y1: float) -> LinearSegment:
    return LinearSegment(Point(x0, y0), Point(x1, y1))


def _family_parabola_std(p: float = 1.0, x_lo: float = -4.0, x_hi: float = 4.0) -> PiecewiseCurve:
    if p <= 0.0:
        raise InvalidParam(f"parabola parameter must be positive, got {p}")
    return build_piecewise_curve([_arc("x^2/(4*p)", x_lo, x_hi, {"p": p})])


def _family_parabola_neg(p: float = 1.0, x_lo: float = -4.0, x_hi: float = 4.0) -> PiecewiseCurve:
    if p <= 0.0:
        raise InvalidParam(f"parabola parameter must be positive, got {p}")
    return build_piecewise_curve([_arc("-p*x^2", x_lo, x_hi, {"p": p})])


def _family_pnorm_circle(p: float) -> PiecewiseCurve:
    """|x|^p + |y|^p = 1 as four quadrant arcs, counterclockwise from (1, 0)."""
    if p <= 1.0:
        raise InvalidParam(f"pnorm circle needs p > 1, got {p}")
    prm = {"p": p}
    upper = "(1 - x^p)^(1/p)"
    upper_neg = "(1 - (0 - x)^p)^(1/p)"
    return build_piecewise_curve(
        [
            _arc(upper, 1.0, 0.0, prm),
            _arc(upper_neg, 0.0, -1.0, prm),
            _arc("-" + upper_neg, -1.0, 0.0, prm),
            _arc("-" + upper, 0.0, 1.0, prm),
        ],
        closed=True,
    )


def _family_taxicab_diamond() -> PiecewiseCurve:
    return build_piecewise_curve(
        [
            _seg(1.0, 0.0, 0.0, 1.0),
            _seg(0.0, 1.0, -1.0, 0.0),
            _seg(-1.0, 0.0, 0.0, -1.0),
            _seg(0.0, -1.0, 1.0, 0.0),
        ],
        closed=True,
    )


def _family_square_axis_aligned(s: float = 1.0) -> PiecewiseCurve:
    if s <= 0.0:
        raise InvalidParam(f"square half-side must be positive, got {s}")
    return build_piecewise_curve(
        [
            _seg(s, -s, s, s),
            _seg(s, s, -s, s),
            _seg(-s, s, -s, -s),
            _seg(-s, -s, s, -s),
        ],
        closed=True,
    )


def _family_example1_outer() -> PiecewiseCurve:
    """Two parabola arcs meeting in corners at (2.5, 0) and (-2.5, 0)."""
    return build_piecewise_curve(
        [
            _arc("-x^2/4 + 25/16", -2.5, 2.5),
            _arc("x^2/4 - 25/16", 2.5, -2.5),
        ],
        closed=True,
    )


def _family_example5_curve() -> PiecewiseCurve:
    """Circle arc, two segments and another circle arc, with three corners."""
    return build_piecewise_curve(
        [
            _arc("sqrt(1 - x^2)", -1.0, 0.0),
            _seg(0.0, 1.0, 1.0, 2.0 / 3.0),
            _seg(1.0, 2.0 / 3.0, 2.0, 1.0),
            _arc("sqrt(1 - (x - 2)^2)", 2.0, 3.0),
        ]
    )


_FAMILIES = {
    "parabola_std": _family_parabola_std,
    "parabola_neg": _family_parabola_neg,
    "pnorm_circle": _family_pnorm_circle,
    "taxicab_diamond": _family_taxicab_diamond,
    "square_axis_aligned": _family_square_axis_aligned,
    "example1_outer": _family_example1_outer,
    "example5_curve": _family_example5_curve,
}


def make_family(name: str, **params: float) -> PiecewiseCurve:
    """Construct a builtin curve family by name.

    Families: parabola_std(p, x_lo, x_hi), parabola_neg(p, x_lo, x_hi),
    pnorm_circle(p), taxicab_diamond, square_axis_aligned(s),
    example1_outer, example5_curve.
    """
    if name not in _FAMILIES:
        raise UnknownFamily(f"no builtin family named {name!r}")
    fn = _FAMILIES[name]
    try:
        return fn(**params)
    except TypeError as exc:
        raise InvalidParam(f"bad parameters for family {name!r}: {exc}") from exc
