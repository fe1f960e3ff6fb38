"""Tests for the verification report: suites, document shape, tolerances."""

import pytest

from dualcurve.curves import make_family
from dualcurve.report import RunReport, run_verification, verify_example

EXPECTED_SUITES = (
    "inversion-construction-agreement",
    "dual-slope-matches-finite-difference",
    "dual-curvature-matches-finite-difference",
    "radial-perpendicularity",
    "reflexivity-roundtrip",
    "scaling-covariance",
)


class TestRunVerification:
    def test_all_suites_present_for_arc_curve(self):
        curve = make_family("parabola_std", p=1.0)
        report = run_verification(curve, target="parabola")
        names = [r.name for r in report.rows]
        for suite in EXPECTED_SUITES:
            assert suite in names
        assert report.target == "parabola"

    def test_segment_only_curve_skips_arc_suites_gracefully(self):
        curve = make_family("taxicab_diamond")
        report = run_verification(curve, target="diamond")
        assert report.all_passed
        slope_rows = [r for r in report.rows if r.name == "dual-slope-matches-finite-difference"]
        # no arcs means nothing measured; the row reports zero worst error
        assert slope_rows[0].measured == 0.0

    def test_tolerance_multiplier_scales_rows(self):
        curve = make_family("pnorm_circle", p=4.0)
        strict = run_verification(curve, tol_multiplier=1.0)
        loose = run_verification(curve, tol_multiplier=10.0)
        strict_by = {r.name: r for r in strict.rows}
        for row in loose.rows:
            assert row.tolerance == pytest.approx(10.0 * strict_by[row.name].tolerance)

    def test_impossible_multiplier_fails_rows(self):
        curve = make_family("pnorm_circle", p=4.0)
        report = run_verification(curve, tol_multiplier=1e-18)
        assert not report.all_passed


class TestVerifyExample:
    @pytest.mark.parametrize("example_id,p", [(1, None), (2, 1.0), (3, 4.0), (4, None), (5, None)])
    def test_examples_pass_with_golden_rows(self, example_id, p):
        report = verify_example(example_id, p=p)
        assert report.all_passed
        assert any(r.name.startswith("golden-") for r in report.rows)
        expected = f"example-{example_id}" + (f"-p{p}" if p is not None else "")
        assert report.target == expected


class TestDocument:
    def test_document_round_trips_rows(self):
        report = verify_example(4)
        doc = report.to_document()
        assert doc["target"] == "example-4"
        assert doc["passed"] is True
        assert len(doc["checks"]) == len(report.rows)
        row = doc["checks"][0]
        for key in ("name", "status", "measured", "tolerance"):
            assert key in row
        assert row["status"] in ("pass", "fail")

    def test_report_is_plain_data(self):
        import json

        doc = verify_example(4).to_document()
        json.dumps(doc)  # must serialize without custom encoders
