"""Tests for the piecewise curve model: arcs, segments, corners, families."""

import math
import random

import pytest

from dualcurve.curves import (
    DirectionArc,
    LinearSegment,
    SmoothArc,
    build_piecewise_curve,
    corner_supporting_lines,
    direction_distance,
    make_family,
    normalize_direction,
    piece_direction,
    scale_curve,
    tangent_line_at,
)
from dualcurve.errors import (
    CornerSupportUndetermined,
    DirectionOutsideInterval,
    DiscontinuousCurve,
    DomainError,
    EmptyCurve,
    InvalidParam,
    LinearArc,
    NonpositiveFactor,
    UnknownFamily,
)
from dualcurve.expr import parse_expression
from dualcurve.geometry import Line, Point


def arc(src, x0, x1, params=None, **kw):
    return SmoothArc(parse_expression(src), x0, x1, params, **kw)


class TestDirections:
    def test_normalize_lands_in_half_open_interval(self):
        rng = random.Random(3001)
        for _ in range(300):
            t = normalize_direction(rng.uniform(-20, 20))
            assert -math.pi / 2 < t <= math.pi / 2

    def test_normalize_identifies_opposite_rays(self):
        for t in (0.3, -1.2, 1.5):
            assert normalize_direction(t + math.pi) == pytest.approx(t, abs=1e-12)

    def test_distance_wraps_at_vertical(self):
        # directions just either side of vertical are close, not pi apart
        d = direction_distance(math.pi / 2 - 0.01, -math.pi / 2 + 0.01)
        assert d == pytest.approx(0.02, abs=1e-12)
        assert direction_distance(0.4, 0.4) == 0.0

    def test_direction_arc_membership(self):
        interval = DirectionArc(start=1.4, sweep=0.5)  # passes through vertical
        assert interval.contains(1.5)
        assert interval.contains(normalize_direction(1.4 + 0.5))
        assert not interval.contains(0.0)
        backward = DirectionArc(start=0.5, sweep=-1.0)
        assert backward.contains(0.0)
        assert not backward.contains(1.0)

    def test_direction_arc_guards(self):
        with pytest.raises(ValueError):
            DirectionArc(start=2.0, sweep=0.1)
        with pytest.raises(ValueError):
            DirectionArc(start=0.0, sweep=math.pi)


class TestSmoothArc:
    def test_reversed_traversal_keeps_domain(self):
        a = arc("x^2", 2.0, -1.0)
        assert a.x_lo == -1.0 and a.x_hi == 2.0 and a.span == 3.0
        assert a.start_point() == Point(2.0, 4.0)
        assert a.end_point() == Point(-1.0, 1.0)

    def test_degenerate_domain_rejected(self):
        with pytest.raises(ValueError):
            arc("x^2", 1.0, 1.0)

    def test_tangent_line_interior(self):
        a = arc("x^2", -2.0, 2.0)
        ln = tangent_line_at(a, 1.0)
        assert ln.slope() == pytest.approx(2.0)
        assert ln.contains(Point(1.0, 1.0))

    def test_tangent_line_vertical_endpoint(self):
        # quarter circle has a vertical tangent at x = 1
        a = arc("sqrt(1 - x^2)", 0.0, 1.0)
        ln = tangent_line_at(a, 1.0)
        assert ln == Line.vertical(1.0)

    def test_tangent_line_outside_domain(self):
        a = arc("x^2", -1.0, 1.0)
        with pytest.raises(DomainError):
            tangent_line_at(a, 2.0)


class TestSegments:
    def test_direction_mod_pi(self):
        seg = LinearSegment(Point(0.0, 0.0), Point(-1.0, -1.0))
        assert seg.direction() == pytest.approx(math.pi / 4)

    def test_carrier_line(self):
        seg = LinearSegment(Point(1.0, 0.0), Point(0.0, 1.0))
        carrier = seg.carrier_line()
        assert carrier.contains(Point(0.5, 0.5))

    def test_coincident_endpoints_rejected(self):
        with pytest.raises(ValueError):
            LinearSegment(Point(1.0, 2.0), Point(1.0, 2.0))


class TestBuild:
    def test_empty_rejected(self):
        with pytest.raises(EmptyCurve):
            build_piecewise_curve([])

    def test_continuity_enforced(self):
        with pytest.raises(DiscontinuousCurve):
            build_piecewise_curve([
                LinearSegment(Point(0.0, 0.0), Point(1.0, 0.0)),
                LinearSegment(Point(2.0, 0.0), Point(3.0, 0.0)),
            ])

    def test_closed_needs_return_to_start(self):
        pieces = [
            LinearSegment(Point(0.0, 0.0), Point(1.0, 0.0)),
            LinearSegment(Point(1.0, 0.0), Point(1.0, 1.0)),
        ]
        build_piecewise_curve(pieces)  # open chain is fine
        with pytest.raises(DiscontinuousCurve):
            build_piecewise_curve(pieces, closed=True)

    def test_straight_expression_rejected_as_arc(self):
        with pytest.raises(LinearArc):
            build_piecewise_curve([arc("2*x + 1", 0.0, 1.0)])

    def test_inflectional_flag_admits_cubic(self):
        # domain chosen so a validation probe lands exactly on the inflection
        build_piecewise_curve([arc("x^3", -8.0, 9.0, None, inflectional=True)])
        with pytest.raises(LinearArc):
            build_piecewise_curve([arc("x^3", -8.0, 9.0)])

    def test_smooth_junction_makes_no_joint(self):
        # two halves of one parabola join smoothly
        c = build_piecewise_curve([arc("x^2", -1.0, 0.0), arc("x^2", 0.0, 1.0)])
        assert c.joints == ()

    def test_corner_detected_with_interval_between_tangents(self):
        c = make_family("taxicab_diamond")
        assert len(c.joints) == 4
        j = c.joint_after(0)
        assert j.at == Point(0.0, 1.0)
        # supporting directions at the top vertex sweep between slopes -1 and 1
        assert j.dir_interval.contains(math.atan(-1.0))
        assert j.dir_interval.contains(0.0)
        assert j.dir_interval.contains(math.atan(1.0))
        assert not j.dir_interval.contains(math.pi / 2)

    def test_corner_supporting_lines_stay_on_one_side(self):
        # interior directions only: at the sweep ends the supporting line
        # grazes a neighbor vertex and roundoff decides its side
        c = make_family("taxicab_diamond")
        j = c.joint_after(0)
        for f in (0.1, 0.3, 0.5, 0.7, 0.9):
            theta = j.dir_interval.start + f * j.dir_interval.sweep
            ln = corner_supporting_lines(j, theta)
            residuals = [ln.membership(v) for v in
                         (Point(1.0, 0.0), Point(-1.0, 0.0), Point(0.0, -1.0))]
            assert all(r < -1e-3 for r in residuals) or all(r > 1e-3 for r in residuals)

    def test_direction_outside_interval_rejected(self):
        c = make_family("taxicab_diamond")
        j = c.joint_after(0)
        with pytest.raises(DirectionOutsideInterval):
            corner_supporting_lines(j, math.pi / 2)

    def test_inflected_junction_has_no_supporting_side(self):
        # the second piece starts at slope 1 but bends below the first piece's
        # carrier within the probe window: no line through the corner keeps
        # all nearby points on a single side
        pieces = [
            LinearSegment(Point(-1.0, 0.0), Point(0.0, 0.0)),
            arc("x - 30*x^2", 0.0, 1.0),
        ]
        with pytest.raises(CornerSupportUndetermined):
            build_piecewise_curve(pieces)

    def test_closed_curve_checks_wraparound_corner(self):
        c = make_family("example1_outer")
        assert c.closed
        assert len(c.joints) == 2
        assert {j.after_piece for j in c.joints} == {0, 1}


class TestVerticalJunctions:
    def test_quarter_circles_meet_smoothly_at_vertical(self):
        # both sides have vertical tangents at (1, 0): no corner
        pieces = [
            arc("-sqrt(1 - x^2)", 0.0, 1.0),
            arc("sqrt(1 - x^2)", 1.0, 0.0),
        ]
        c = build_piecewise_curve(pieces)
        assert c.joints == ()

    def test_piece_direction_at_vertical_endpoint(self):
        a = arc("sqrt(1 - x^2)", 1.0, 0.0)
        assert piece_direction(a, at_end=False) == pytest.approx(math.pi / 2)


class TestScaling:
    def test_points_scale_linearly(self):
        c = make_family("parabola_std", p=1.0)
        s = scale_curve(c, 2.0)
        a0, a1 = c.pieces[0], s.pieces[0]
        assert a1.x_start == 2.0 * a0.x_start and a1.x_end == 2.0 * a0.x_end
        rng = random.Random(3002)
        for _ in range(50):
            x = rng.uniform(a0.x_lo, a0.x_hi)
            assert a1.value(2.0 * x) == pytest.approx(2.0 * a0.value(x), abs=1e-12)

    def test_segments_and_joints_scale(self):
        c = make_family("taxicab_diamond")
        s = scale_curve(c, 3.0)
        assert s.pieces[0].p_start == Point(3.0, 0.0)
        assert len(s.joints) == 4
        assert s.joint_after(0).at == Point(0.0, 3.0)

    def test_bad_factor_rejected(self):
        c = make_family("taxicab_diamond")
        for bad in (0.0, -1.0, math.inf, math.nan):
            with pytest.raises(NonpositiveFactor):
                scale_curve(c, bad)


class TestFamilies:
    def test_unknown_family(self):
        with pytest.raises(UnknownFamily):
            make_family("dodecahedron")

    def test_bad_params(self):
        with pytest.raises(InvalidParam):
            make_family("pnorm_circle", p=1.0)
        with pytest.raises(InvalidParam):
            make_family("parabola_std", p=-2.0)
        with pytest.raises(InvalidParam):
            make_family("square_axis_aligned", s=0.0)

    def test_pnorm_circle_shape(self):
        c = make_family("pnorm_circle", p=4.0)
        assert c.closed and len(c.pieces) == 4 and c.joints == ()
        # traversal starts at (1, 0) and walks counterclockwise
        assert c.pieces[0].start_point() == Point(1.0, 0.0)
        assert c.pieces[0].end_point() == Point(0.0, 1.0)
        for piece in c.pieces:
            mid = piece.value(0.5 * (piece.x_start + piece.x_end))
            x = 0.5 * (piece.x_start + piece.x_end)
            assert abs(x) ** 4 + abs(mid) ** 4 == pytest.approx(1.0, abs=1e-12)

    def test_square_family(self):
        c = make_family("square_axis_aligned", s=2.0)
        assert c.closed and len(c.pieces) == 4 and len(c.joints) == 4

    def test_example5_has_three_corners(self):
        c = make_family("example5_curve")
        assert len(c.pieces) == 4
        assert len(c.joints) == 3
        assert c.joint_after(0).at == Point(0.0, 1.0)
        assert c.joint_after(1).at == Point(1.0, 2.0 / 3.0)
        assert c.joint_after(2).at == Point(2.0, 1.0)
