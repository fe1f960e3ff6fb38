"""Tests for the five golden reference examples."""

import math

import pytest

from dualcurve.corpus import golden_check, make_example
from dualcurve.dualizer import dual_point_of_arc, dualize_curve
from dualcurve.errors import InvalidParam, UnknownExample
from dualcurve.geometry import Point


class TestMakeExample:
    def test_unknown_id(self):
        with pytest.raises(UnknownExample):
            make_example(0)
        with pytest.raises(UnknownExample):
            make_example(6)

    def test_parameter_rules(self):
        with pytest.raises(InvalidParam):
            make_example(1, p=2.0)
        with pytest.raises(InvalidParam):
            make_example(3, p=1.0)
        with pytest.raises(InvalidParam):
            make_example(5, p=2.0)
        make_example(2, p=0.5)
        make_example(3, p=4.0)

    def test_named_points_present(self):
        ex = make_example(5)
        for name in ("A", "B", "C", "D", "E"):
            assert name in ex.named_points
        assert ex.named_points["B"] == Point(0.0, 1.0)


class TestDualResiduals:
    def test_example1_residual_vanishes_on_dual(self):
        ex = make_example(1)
        arc0 = ex.original.pieces[0]
        for a in (0.4, 1.0, 1.9, -2.2):
            q = dual_point_of_arc(arc0, a)
            assert abs(ex.dual_residual(q)) < 1e-12

    def test_example1_residual_flags_off_curve(self):
        ex = make_example(1)
        assert abs(ex.dual_residual(Point(0.3, 0.9))) > 1e-3

    def test_example2_residual_tracks_parameter(self):
        for p in (0.5, 1.0, 2.0):
            ex = make_example(2, p=p)
            arc0 = ex.original.pieces[0]
            for a in (0.5, 1.5, -2.5):
                q = dual_point_of_arc(arc0, a)
                assert abs(ex.dual_residual(q)) < 1e-12

    def test_example3_residual_is_qnorm_membership(self):
        p = 4.0
        q_exp = p / (p - 1.0)
        ex = make_example(3, p=p)
        arc0 = ex.original.pieces[0]
        d = dual_point_of_arc(arc0, 0.5)
        assert abs(ex.dual_residual(d)) < 1e-12
        # consistency with the plain q-norm expression
        direct = abs(abs(d.x) ** q_exp + abs(d.y) ** q_exp - 1.0)
        assert abs(ex.dual_residual(d)) == pytest.approx(direct, abs=1e-12)

    def test_example4_residual_is_square_membership(self):
        ex = make_example(4)
        assert abs(ex.dual_residual(Point(1.0, 0.3))) < 1e-15
        assert abs(ex.dual_residual(Point(0.5, 1.0))) < 1e-15
        assert ex.dual_residual(Point(0.5, 0.5)) > 0.4


class TestGoldenChecks:
    @pytest.mark.parametrize("example_id,p", [
        (1, None), (2, None), (2, 0.5), (2, 2.0),
        (3, None), (3, 3.0), (3, 4.0), (4, None), (5, None),
    ])
    def test_all_checks_pass(self, example_id, p):
        report = golden_check(example_id, p=p)
        assert report.example_id == example_id
        failed = [c for c in report.checks if not c.passed]
        assert not failed, failed

    def test_accepts_precomputed_result(self):
        ex = make_example(4)
        result = dualize_curve(ex.original, n_samples=11)
        report = golden_check(4, result=result)
        assert all(c.passed for c in report.checks)

    def test_example1_corner_endpoints_exact(self):
        report = golden_check(1)
        by_name = {c.name: c for c in report.checks}
        corner = by_name["corner-dual-segment-endpoints"]
        assert corner.passed and corner.measured < 1e-12

    def test_example5_detects_flat_dual_piece(self):
        report = golden_check(5)
        names = [c.name for c in report.checks]
        assert "flat-piece-y-equals-1" in names
        assert "self-intersection-at-B" in names

    def test_max_residual_reported(self):
        report = golden_check(3, p=4.0)
        assert report.max_residual >= 0.0
        assert report.all_passed
