"""Legendre transformation of convex/concave arcs and its dual-curve bridge.

A tangent line y = m*x - t of a graph arc is recorded as the pair (m, t)
with t the negated intercept; negation makes the transform its own inverse.
For an arc whose derivative has a known inverse, t(m) = m*a - y(a) with
a = dinv(m).  The change of variables m = -u/v, t = -1/v carries (m, t) to
the dual-curve point (u, v), so the two transforms can borrow each other's
machinery; bridge_to_dual implements that substitution.

Arcs handled here must have one-signed second derivative, so the derivative
is strictly monotone and an inverse exists.  dinv may be analytic (builtin
families) or built by bisection via numeric_derivative_inverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .curves import SmoothArc
from .errors import (
    InvalidExponent,
    InvalidSlope,
    NonInvertibleDerivative,
    SlopeOutOfRange,
    ZeroIntercept,
)
from .expr import parse_expression
from .geometry import Point

_RANGE_CHECKS = 20
_RANGE_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class LegendrePoint:
    """Slope m and negated intercept t of a tangent line y = m*x - t."""

    m: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.m) and math.isfinite(self.t)):
            raise ValueError("slope and intercept must both be finite")


@dataclass(frozen=True)
class InvertibleArc:
    """An arc packaged with the inverse dinv of its derivative.

    dinv must satisfy y'(dinv(m)) = m on slope_range; construction
    spot-checks that identity at interior slopes and rejects inverses that
    fail it.
    """

    arc: SmoothArc
    dinv: Callable[[float], float]
    slope_range: tuple[float, float]

    def __post_init__(self):
        lo, hi = self.slope_range
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValueError(f"slope range must be a finite interval, got ({lo}, {hi})")
        for k in range(_RANGE_CHECKS):
            m = lo + (hi - lo) * (k + 0.5) / _RANGE_CHECKS
            a = self.dinv(m)
            got = self.arc.jet(a).d1
            if abs(got - m) > _RANGE_CHECK_TOL:
                raise NonInvertibleDerivative(
                    f"dinv fails at m = {m}: y'(dinv(m)) = {got}"
                )


def legendre_at(ia: InvertibleArc, m: float) -> LegendrePoint:
    """Transform value t(m) = m*a - y(a) at a = dinv(m), packaged with m."""
    lo, hi = ia.slope_range
    tol = 1e-12 * (1.0 + abs(m))
    if m < lo - tol or m > hi + tol:
        raise SlopeOutOfRange(f"slope {m} outside invertible range [{lo}, {hi}]")
    a = ia.dinv(m)
    return LegendrePoint(m, m * a - ia.arc.value(a))


def legendre_pnorm_closed_form(p: float, m: float) -> float:
    """Transform of the first-quadrant unit p-circle arc: -(1 + (-m)^q)^(1/q).

    q is the conjugate exponent p/(p-1); the arc's slopes are negative.
    """
    if p <= 1.0:
        raise InvalidExponent(f"conjugate exponent needs p > 1, got {p}")
    if m >= 0.0:
        raise InvalidSlope(f"first-quadrant arc slopes are negative, got m = {m}")
    q = p / (p - 1.0)
    return -((1.0 + (-m) ** q) ** (1.0 / q))


def bridge_to_dual(lp: LegendrePoint) -> Point:
    """Dual-curve point (m/t, -1/t) of the tangent line recorded by (m, t).

    t = 0 means the tangent passes through the origin, the excluded case of
    the point-line transformation.
    """
    if lp.t == 0.0:
        raise ZeroIntercept("tangent through the origin has no dual point")
    return Point(lp.m / lp.t, -1.0 / lp.t)


# ---------------------------------------------------------------------------
# derivative inversion

def numeric_derivative_inverse(arc: SmoothArc, inset: float = 1e-9) -> Callable[[float], float]:
    """Invert y' by bisection over the arc domain.

    Valid because the arcs in scope have strictly monotone derivatives.
    Endpoints are inset slightly; jets may be singular there.
    """
    a_lo = arc.x_lo + inset * arc.span
    a_hi = arc.x_hi - inset * arc.span

    def dinv(m: float) -> float:
        f_lo = arc.jet(a_lo).d1 - m
        f_hi = arc.jet(a_hi).d1 - m
        if f_lo == 0.0:
            return a_lo
        if f_hi == 0.0:
            return a_hi
        if (f_lo > 0.0) == (f_hi > 0.0):
            raise NonInvertibleDerivative(
                f"slope {m} not bracketed by the arc's derivative range"
            )
        lo, hi = a_lo, a_hi
        lo_positive = f_lo > 0.0
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            fm = arc.jet(mid).d1 - m
            if fm == 0.0:
                return mid
            if (fm > 0.0) == lo_positive:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    return dinv


def invertible_from_numeric(
    arc: SmoothArc, slope_range: tuple[float, float] | None = None
) -> InvertibleArc:
    """Package an arc with a bisection-based derivative inverse.

    With no range given, the derivative values just inside the two endpoints
    are used, shrunk by a hair so every range slope stays bracketed.
    """
    dinv = numeric_derivative_inverse(arc)
    if slope_range is None:
        inset = 1e-9 * arc.span
        d0 = arc.jet(arc.x_lo + inset).d1
        d1 = arc.jet(arc.x_hi - inset).d1
        lo, hi = sorted((d0, d1))
        pad = 1e-6 * (hi - lo)
        slope_range = (lo + pad, hi - pad)
    return InvertibleArc(arc=arc, dinv=dinv, slope_range=slope_range)


def invertible_pnorm_arc(p: float, slope_range: tuple[float, float] = (-50.0, -0.02)) -> InvertibleArc:
    """First-quadrant unit p-circle arc with its analytic derivative inverse.

    Solving y'(a) = m on x^p + y^p = 1 gives x/y = (-m)^(1/(p-1)), hence
    a = (-m)^(1/(p-1)) / (1 + (-m)^q)^(1/p).
    """
    if p <= 1.0:
        raise InvalidExponent(f"p-circle arc needs p > 1, got {p}")
    arc = SmoothArc(parse_expression("(1 - x^p)^(1/p)"), 0.0, 1.0, {"p": p})
    q = p / (p - 1.0)

    def dinv(m: float) -> float:
        if m >= 0.0:
            raise InvalidSlope(f"first-quadrant arc slopes are negative, got m = {m}")
        s = (-m) ** (1.0 / (p - 1.0))
        return s / (1.0 + (-m) ** q) ** (1.0 / p)

    return InvertibleArc(arc=arc, dinv=dinv, slope_range=slope_range)


# ---------------------------------------------------------------------------
# involution

def involution_check(ia: InvertibleArc, n_samples: int = 40) -> float:
    """Apply the transform twice numerically and compare against the arc.

    The second application treats t as a function of m in its own right:
    t' is taken by central differences and inverted by bisection, with a 5%
    margin trimmed off both ends of the slope range so the differences stay
    inside it.  Returns the worst |double transform - y| over the samples.
    """
    lo, hi = ia.slope_range
    margin = 0.05 * (hi - lo)
    m_lo, m_hi = lo + margin, hi - margin

    def t_of(m: float) -> float:
        return legendre_at(ia, m).t

    def t_prime(m: float) -> float:
        h = 1e-6 * (1.0 + abs(m))
        return (t_of(m + h) - t_of(m - h)) / (2.0 * h)

    tp_lo = t_prime(m_lo)
    tp_hi = t_prime(m_hi)
    # sample strictly inside the bisection interval: at its ends the true
    # root coincides with the boundary and difference noise in t' flips the
    # bracket test
    inner = 0.05 * (m_hi - m_lo)
    s_lo, s_hi = m_lo + inner, m_hi - inner
    worst = 0.0
    for i in range(n_samples):
        m_i = s_lo + (s_hi - s_lo) * i / (n_samples - 1)
        x_i = ia.dinv(m_i)
        f_lo = tp_lo - x_i
        f_hi = tp_hi - x_i
        if f_lo == 0.0:
            m_star = m_lo
        elif f_hi == 0.0:
            m_star = m_hi
        elif (f_lo > 0.0) == (f_hi > 0.0):
            raise NonInvertibleDerivative(
                f"t' does not bracket {x_i} over the trimmed slope range"
            )
        else:
            a, b = m_lo, m_hi
            lo_positive = f_lo > 0.0
            for _ in range(80):
                mid = 0.5 * (a + b)
                fm = t_prime(mid) - x_i
                if fm == 0.0:
                    break
                if (fm > 0.0) == lo_positive:
                    a = mid
                else:
                    b = mid
            m_star = 0.5 * (a + b)
        double = x_i * m_star - t_of(m_star)
        worst = max(worst, abs(double - ia.arc.value(x_i)))
    return worst
