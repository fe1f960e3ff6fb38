"""Tests for points, lines, and the point-line dual transformation."""

import math
import random

import pytest

from dualcurve.geometry import (
    ORIGIN,
    VERTICAL,
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
from dualcurve.errors import (
    LineThroughOrigin,
    OriginNotDualizable,
    OriginNotInvertible,
    ParallelLines,
)


class TestPoint:
    def test_negative_zero_folds_to_positive(self):
        p = Point(-0.0, -0.0)
        assert math.copysign(1.0, p.x) == 1.0
        assert math.copysign(1.0, p.y) == 1.0

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Point(math.nan, 0.0)
        with pytest.raises(ValueError):
            Point(0.0, math.inf)

    def test_dist_and_norm(self):
        assert Point(3.0, 4.0).norm() == 5.0
        assert Point(1.0, 1.0).dist(Point(4.0, 5.0)) == 5.0


class TestLineNormalization:
    def test_max_coefficient_is_one(self):
        ln = Line(2.0, 4.0, 8.0)
        assert max(abs(ln.a), abs(ln.b)) == 1.0
        assert ln.a == 0.5 and ln.b == 1.0 and ln.c == 2.0

    def test_sign_convention_makes_equal_lines_compare_equal(self):
        # same locus written two ways
        assert Line(1.0, -2.0, 3.0) == Line(-2.0, 4.0, -6.0)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            Line(0.0, 0.0, 1.0)

    def test_slope_and_vertical(self):
        assert Line.from_slope_intercept(2.0, 1.0).slope() == 2.0
        assert Line.vertical(3.0).slope() == VERTICAL
        assert Line.horizontal(-1.0).slope() == 0.0

    def test_through_points(self):
        ln = Line.through_points(Point(1.0, 3.0), Point(2.0, 5.0))
        assert ln.slope() == pytest.approx(2.0)
        assert ln.contains(Point(1.0, 3.0))
        assert ln.contains(Point(2.0, 5.0))
        with pytest.raises(ValueError):
            Line.through_points(Point(1.0, 1.0), Point(1.0, 1.0))

    def test_from_point_direction_matches_slope_form(self):
        theta = math.atan(2.0)
        ln = Line.from_point_direction(Point(0.0, 1.0), theta)
        assert ln.slope() == pytest.approx(2.0)
        assert ln.contains(Point(0.0, 1.0))

    def test_contains_origin(self):
        assert Line(1.0, 1.0, 0.0).contains_origin
        assert not Line(1.0, 1.0, 0.5).contains_origin


class TestDualTransform:
    """Frozen oracles for the point-line transform."""

    def test_dual_of_point_2_3(self):
        # (2, 3) maps to the line 2x + 3y = 1
        ln = dual_of_point(Point(2.0, 3.0))
        assert ln.membership(Point(0.5, 0.0)) == 0.0
        assert abs(ln.membership(Point(-1.0, 1.0))) < 1e-15
        assert ln == Line(2.0, 3.0, 1.0)

    def test_dual_of_origin_rejected(self):
        with pytest.raises(OriginNotDualizable):
            dual_of_point(ORIGIN)

    def test_dual_of_line_through_origin_rejected(self):
        with pytest.raises(LineThroughOrigin):
            dual_of_line(Line(1.0, 2.0, 0.0))

    def test_point_line_point_round_trip(self):
        rng = random.Random(1001)
        for _ in range(200):
            p = Point(rng.uniform(-9, 9), rng.uniform(-9, 9))
            if p.norm() < 1e-3:
                continue
            back = dual_of_line(dual_of_point(p))
            assert back.dist(p) <= 1e-12 * (1.0 + p.norm())

    def test_incidence_preserved(self):
        # point on line <=> dual line passes through dual point
        rng = random.Random(1002)
        for _ in range(200):
            a, b = rng.uniform(-4, 4), rng.uniform(-4, 4)
            c = rng.uniform(0.3, 4.0)
            if max(abs(a), abs(b)) < 1e-6:
                a = 1.0
            ln = Line(a, b, c)
            # pick a point on ln away from the origin
            t = rng.uniform(-3, 3)
            if abs(ln.b) > abs(ln.a):
                p = Point(t, (ln.c - ln.a * t) / ln.b)
            else:
                p = Point((ln.c - ln.b * t) / ln.a, t)
            if p.norm() < 1e-3:
                continue
            assert abs(dual_of_point(p).membership(dual_of_line(ln))) < 1e-10

    def test_duals_of_two_points_meet_at_dual_of_joining_line(self):
        l1 = dual_of_point(Point(1.0, 3.0))
        l2 = dual_of_point(Point(2.0, 5.0))
        meet = intersect_lines(l1, l2)
        assert meet.dist(Point(-2.0, 1.0)) < 1e-14
        join = Line.through_points(Point(1.0, 3.0), Point(2.0, 5.0))
        assert dual_of_line(join).dist(meet) < 1e-14


class TestIntersect:
    def test_simple_crossing(self):
        p = intersect_lines(Line.from_slope_intercept(1.0, 0.0),
                            Line.from_slope_intercept(-1.0, 2.0))
        assert p.dist(Point(1.0, 1.0)) < 1e-15

    def test_parallel_raises(self):
        with pytest.raises(ParallelLines):
            intersect_lines(Line.from_slope_intercept(2.0, 0.0),
                            Line.from_slope_intercept(2.0, 1.0))


class TestInversionConstruction:
    def test_foot_of_perpendicular_oracle(self):
        # y = x + 2: the foot from the origin is (-1, 1)
        foot = foot_of_perpendicular(Line.from_slope_intercept(1.0, 2.0))
        assert foot.dist(Point(-1.0, 1.0)) < 1e-15

    def test_invert_3_4(self):
        q = invert_in_unit_circle(Point(3.0, 4.0))
        assert q.dist(Point(3.0 / 25.0, 4.0 / 25.0)) < 1e-16

    def test_inversion_is_involutive(self):
        rng = random.Random(1003)
        for _ in range(100):
            p = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
            if p.norm() < 1e-3:
                continue
            back = invert_in_unit_circle(invert_in_unit_circle(p))
            assert back.dist(p) <= 1e-12 * (1.0 + p.norm())

    def test_origin_not_invertible(self):
        with pytest.raises(OriginNotInvertible):
            invert_in_unit_circle(ORIGIN)

    def test_both_dual_routes_agree(self):
        rng = random.Random(1004)
        for _ in range(500):
            a, b = rng.uniform(-5, 5), rng.uniform(-5, 5)
            if max(abs(a), abs(b)) < 1e-6:
                a = 1.0
            c = rng.uniform(0.2, 5.0) * rng.choice((-1.0, 1.0))
            ln = Line(a, b, c)
            assert dual_by_inversion(ln).dist(dual_of_line(ln)) < 1e-10

    def test_distance_product_along_the_ray(self):
        # |foot| * |dual| = 1 since the dual is the circle inverse of the foot
        rng = random.Random(1005)
        for _ in range(200):
            ln = Line(rng.uniform(0.3, 3), rng.uniform(-3, 3), rng.uniform(0.2, 4))
            prod = foot_of_perpendicular(ln).norm() * dual_by_inversion(ln).norm()
            assert abs(prod - 1.0) < 1e-10


class TestParallelFamilies:
    def test_carrier_through_origin(self):
        for m in (-3.0, -1.0, 0.5, 2.0):
            carrier = parallel_dual_carrier(m)
            assert carrier.contains_origin
            # duals of three parallel lines sit on the carrier
            for intercept in (0.5, 1.0, -2.0):
                d = dual_of_line(Line.from_slope_intercept(m, intercept))
                assert carrier.contains(d, tol=1e-12)

    def test_vertical_family_carrier_is_x_axis(self):
        carrier = parallel_dual_carrier(VERTICAL)
        for x0 in (0.5, 2.0, -3.0):
            d = dual_of_line(Line.vertical(x0))
            assert carrier.contains(d)
        assert carrier == Line.horizontal(0.0)

    def test_horizontal_family_carrier_is_y_axis(self):
        assert parallel_dual_carrier(0.0) == Line.vertical(0.0)


class TestAngleTangent:
    def test_known_angles(self):
        forty_five = angle_tangent_between(Line.from_slope_intercept(0.0, 0.0),
                                           Line.from_slope_intercept(1.0, 1.0))
        assert abs(abs(forty_five.tan_value) - 1.0) < 1e-15
        slopes_2_3 = angle_tangent_between(Line.from_slope_intercept(2.0, 0.0),
                                           Line.from_slope_intercept(3.0, 0.0))
        assert abs(abs(slopes_2_3.tan_value) - 1.0 / 7.0) < 1e-15

    def test_perpendicular_flagged(self):
        m = angle_tangent_between(Line.from_slope_intercept(2.0, 0.0),
                                  Line.from_slope_intercept(-0.5, 1.0))
        assert m.vertical and m.tan_value is None

    def test_vertical_member_handled(self):
        m = angle_tangent_between(Line.vertical(1.0), Line.from_slope_intercept(1.0, 0.0))
        assert not m.vertical
        assert abs(abs(m.tan_value) - 1.0) < 1e-15

    def test_angle_measure_guard(self):
        with pytest.raises(ValueError):
            AngleMeasure(tan_value=1.0, vertical=True)
        with pytest.raises(ValueError):
            AngleMeasure()
