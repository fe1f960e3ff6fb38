"""Verification suites producing machine-readable pass/fail reports.

Each suite checks one mathematical fact about a curve's dualization: the
inversion construction agrees with the algebraic dual, analytic dual slope
and curvature match finite differences of the sampled dual, dualizing twice
returns to the start, dilation covaries, and the dual point stays
perpendicular to its tangent line.  Fixture curves additionally run their
golden comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import golden_check, make_example
from .curves import PiecewiseCurve, SmoothArc, tangent_line_at
from .dualizer import (
    dual_point_of_arc,
    dual_second_derivative,
    dual_tangent_slope,
    dualize_curve,
    reflexivity_roundtrip,
    scaling_covariance_check,
)
from .errors import (
    DomainError,
    InflectionPoint,
    NonDifferentiable,
    TangentThroughOrigin,
    ZeroOrdinate,
)
from .geometry import dual_by_inversion, dual_of_line


@dataclass(frozen=True)
class CheckRow:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""


@dataclass(frozen=True)
class RunReport:
    target: str
    rows: tuple[CheckRow, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_document(self) -> dict:
        return {
            "target": self.target,
            "passed": self.all_passed,
            "checks": [
                {
                    "name": r.name,
                    "status": "pass" if r.passed else "fail",
                    "measured": r.measured,
                    "tolerance": r.tolerance,
                    "detail": r.detail,
                }
                for r in self.rows
            ],
        }


def _interior_params(arc: SmoothArc, count: int, inset: float = 0.1) -> list[float]:
    lo = arc.x_lo + inset * arc.span
    hi = arc.x_hi - inset * arc.span
    return [lo + (hi - lo) * k / (count - 1) for k in range(count)]


def _row(name: str, measured: float, tolerance: float, detail: str = "") -> CheckRow:
    return CheckRow(name=name, passed=measured < tolerance, measured=measured,
                    tolerance=tolerance, detail=detail)


def _arcs(curve: PiecewiseCurve) -> list[SmoothArc]:
    return [p for p in curve.pieces if isinstance(p, SmoothArc)]


def _suite_inversion_agreement(curve: PiecewiseCurve, tol: float) -> CheckRow:
    worst = 0.0
    lines = []
    for arc in _arcs(curve):
        for a in _interior_params(arc, 25):
            try:
                lines.append(tangent_line_at(arc, a))
            except (DomainError, NonDifferentiable):
                continue
    for joint in curve.joints:
        lines.append(_corner_midline(joint))
    used = 0
    for line in lines:
        if line.contains_origin:
            continue
        p1 = dual_of_line(line)
        p2 = dual_by_inversion(line)
        worst = max(worst, abs(p1.x - p2.x), abs(p1.y - p2.y))
        used += 1
    return _row("inversion-construction-agreement", worst, tol,
                f"{used} tangent and supporting lines")


def _corner_midline(joint):
    """Supporting line at the middle of the corner's direction interval."""
    from .curves import corner_supporting_lines

    return corner_supporting_lines(joint, joint.dir_interval.midpoint)


def _suite_dual_slope_fd(curve: PiecewiseCurve, tol: float) -> CheckRow:
    worst = 0.0
    used = 0
    for arc in _arcs(curve):
        for a in _interior_params(arc, 10):
            h = 1e-5 * (1.0 + abs(a))
            try:
                analytic = dual_tangent_slope(arc, a)
                if math.isinf(analytic):
                    continue
                p_minus = dual_point_of_arc(arc, a - h)
                p_plus = dual_point_of_arc(arc, a + h)
            except TangentThroughOrigin:
                continue
            du = p_plus.x - p_minus.x
            if du == 0.0:
                continue
            fd = (p_plus.y - p_minus.y) / du
            worst = max(worst, abs(fd - analytic) / (1.0 + abs(analytic)))
            used += 1
    return _row("dual-slope-matches-finite-difference", worst, tol, f"{used} parameters")


def _suite_dual_curvature_fd(curve: PiecewiseCurve, tol: float) -> CheckRow:
    worst = 0.0
    used = 0
    for arc in _arcs(curve):
        if arc.inflectional:
            continue
        for a in _interior_params(arc, 10):
            h = 1e-5 * (1.0 + abs(a))
            try:
                analytic = dual_second_derivative(arc, a)
                pts = [dual_point_of_arc(arc, a + s) for s in (-h, 0.0, h)]
            except (TangentThroughOrigin, InflectionPoint, ZeroOrdinate):
                continue
            fd = _second_divided_difference(pts)
            if fd is None:
                continue
            worst = max(worst, abs(fd - analytic) / abs(analytic))
            used += 1
    return _row("dual-curvature-matches-finite-difference", worst, tol, f"{used} parameters")


def _second_divided_difference(pts) -> float | None:
    """Second derivative estimate of v(u) through three dual samples."""
    (u0, v0), (u1, v1), (u2, v2) = ((p.x, p.y) for p in pts)
    d01, d02, d12 = u0 - u1, u0 - u2, u1 - u2
    if d01 == 0.0 or d02 == 0.0 or d12 == 0.0:
        return None
    return 2.0 * (v0 / (d01 * d02) - v1 / (d01 * d12) + v2 / (d02 * d12))


def _suite_radial_perpendicularity(curve: PiecewiseCurve, tol: float) -> CheckRow:
    from .dualizer import radial_perpendicularity_check

    worst = 0.0
    used = 0
    for arc in _arcs(curve):
        for a in _interior_params(arc, 25):
            try:
                worst = max(worst, abs(radial_perpendicularity_check(arc, a)))
            except TangentThroughOrigin:
                continue
            used += 1
    return _row("radial-perpendicularity", worst, tol, f"{used} parameters")


def run_verification(
    curve: PiecewiseCurve,
    target: str = "<curve>",
    example_id: int | None = None,
    p: float | None = None,
    n_samples: int = 201,
    tol_multiplier: float = 1.0,
) -> RunReport:
    """Run every applicable suite on the curve and collect one row per check.

    tol_multiplier loosens (or tightens) every tolerance by the same factor;
    1.0 is the contract level.
    """
    t = tol_multiplier
    rows: list[CheckRow] = [
        _suite_inversion_agreement(curve, 1e-10 * t),
        _suite_dual_slope_fd(curve, 1e-5 * t),
        _suite_dual_curvature_fd(curve, 1e-4 * t),
        _suite_radial_perpendicularity(curve, 1e-12 * t),
        _row("reflexivity-roundtrip", reflexivity_roundtrip(curve, n_samples), 1e-8 * t),
        _row("scaling-covariance", scaling_covariance_check(curve, 2.0, n_samples), 1e-10 * t),
    ]
    if example_id is not None:
        result = dualize_curve(curve, n_samples)
        golden = golden_check(example_id, result, p=p)
        for c in golden.checks:
            rows.append(CheckRow(name=f"golden-{c.name}", passed=c.passed,
                                 measured=c.measured, tolerance=c.tolerance,
                                 detail=c.detail))
    return RunReport(target=target, rows=tuple(rows))


def verify_example(example_id: int, p: float | None = None,
                   n_samples: int = 201, tol_multiplier: float = 1.0) -> RunReport:
    example = make_example(example_id, p)
    return run_verification(
        example.original,
        target=f"example-{example_id}" + (f"-p{p}" if p is not None else ""),
        example_id=example_id,
        p=p,
        n_samples=n_samples,
        tol_multiplier=tol_multiplier,
    )
