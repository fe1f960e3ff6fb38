"""Point-line duality primitives in the plane.

The dual transformation sends the point (a, b) to the line a*x + b*y = 1 and
the line c*x + d*y = 1 to the point (c, d).  Lines are stored as normalized
general-form triples (a, b, c) for a*x + b*y = c, so vertical lines need no
special casing; a line is dualizable exactly when it does not contain the
origin.  All values here are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    LineThroughOrigin,
    OriginNotDualizable,
    OriginNotInvertible,
    ParallelLines,
)

# |c| below this, after normalization, means the line contains the origin.
ORIGIN_TOL = 1e-12
# Determinant threshold for normalized coefficient pairs.
PARALLEL_TOL = 1e-12

# Slope descriptor for vertical lines.
VERTICAL = math.inf


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")
        # fold -0.0 so componentwise comparisons stay clean
        object.__setattr__(self, "x", self.x + 0.0)
        object.__setattr__(self, "y", self.y + 0.0)

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


ORIGIN = Point(0.0, 0.0)


@dataclass(frozen=True)
class Line:
    """The locus a*x + b*y = c.

    Coefficients are normalized so max(|a|, |b|) = 1 and the first nonzero of
    (a, b) is positive, which makes equal lines compare componentwise.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(c)):
            raise ValueError("line coefficients must be finite")
        s = max(abs(a), abs(b))
        if s == 0.0:
            raise ValueError("degenerate line: a and b are both zero")
        a, b, c = a / s, b / s, c / s
        if a < 0.0 or (a == 0.0 and b < 0.0):
            a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a + 0.0)
        object.__setattr__(self, "b", b + 0.0)
        object.__setattr__(self, "c", c + 0.0)

    # construction helpers

    @classmethod
    def from_slope_intercept(cls, m: float, intercept: float) -> "Line":
        """The line y = m*x + intercept."""
        return cls(-m, 1.0, intercept)

    @classmethod
    def vertical(cls, x0: float) -> "Line":
        return cls(1.0, 0.0, x0)

    @classmethod
    def horizontal(cls, y0: float) -> "Line":
        return cls(0.0, 1.0, y0)

    @classmethod
    def from_point_slope(cls, p: Point, m: float) -> "Line":
        if math.isinf(m):
            return cls.vertical(p.x)
        return cls(-m, 1.0, p.y - m * p.x)

    @classmethod
    def from_point_direction(cls, p: Point, theta: float) -> "Line":
        """Line through p whose direction makes angle theta with the x axis."""
        a, b = -math.sin(theta), math.cos(theta)
        return cls(a, b, a * p.x + b * p.y)

    @classmethod
    def through_points(cls, p: Point, q: Point) -> "Line":
        if p.x == q.x and p.y == q.y:
            raise ValueError("two coincident points do not determine a line")
        return cls(q.y - p.y, p.x - q.x, p.x * q.y - q.x * p.y)

    # queries

    @property
    def contains_origin(self) -> bool:
        return abs(self.c) < ORIGIN_TOL

    def slope(self) -> float:
        if self.b == 0.0:
            return VERTICAL
        return -self.a / self.b

    def membership(self, p: Point) -> float:
        """Signed residual a*x + b*y - c; zero exactly on the line."""
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point, tol: float = 1e-12) -> bool:
        return abs(self.membership(p)) <= tol


@dataclass(frozen=True)
class AngleMeasure:
    """Tangent of the angle between two lines, or a right-angle flag."""

    tan_value: float | None = None
    vertical: bool = False

    def __post_init__(self):
        if self.vertical:
            if self.tan_value is not None:
                raise ValueError("right angle carries no tangent value")
        else:
            if self.tan_value is None or not math.isfinite(self.tan_value):
                raise ValueError("angle tangent must be finite unless flagged vertical")


def dual_of_point(p: Point) -> Line:
    """Dual line x*p.x + y*p.y = 1 of a point other than the origin."""
    if p.x == 0.0 and p.y == 0.0:
        raise OriginNotDualizable("the origin has no dual line")
    return Line(p.x, p.y, 1.0)


def dual_of_line(line: Line) -> Point:
    """Dual point of a line not through the origin: rescale to c = 1."""
    if line.contains_origin:
        raise LineThroughOrigin(f"line {line.a}*x + {line.b}*y = {line.c} contains the origin")
    return Point(line.a / line.c, line.b / line.c)


def intersect_lines(l1: Line, l2: Line) -> Point:
    """Unique intersection point, by Cramer's rule on normalized triples."""
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) <= PARALLEL_TOL:
        raise ParallelLines(f"lines are parallel within tolerance (det = {det})")
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point(x, y)


def foot_of_perpendicular(line: Line) -> Point:
    """Foot of the perpendicular dropped from the origin onto the line."""
    if line.contains_origin:
        raise LineThroughOrigin("the foot from the origin is the origin itself")
    n2 = line.a * line.a + line.b * line.b
    return Point(line.c * line.a / n2, line.c * line.b / n2)


def invert_in_unit_circle(p: Point) -> Point:
    """Circle inversion p -> p / |p|^2 in the unit circle about the origin."""
    if p.x == 0.0 and p.y == 0.0:
        raise OriginNotInvertible("the origin is fixed by no inversion image")
    n2 = p.x * p.x + p.y * p.y
    return Point(p.x / n2, p.y / n2)


def dual_by_inversion(line: Line) -> Point:
    """Dual point built geometrically: invert the foot of the perpendicular.

    Agrees with dual_of_line on every dualizable line; kept as an independent
    construction so the two routes can be checked against each other.
    """
    return invert_in_unit_circle(foot_of_perpendicular(line))


def parallel_dual_carrier(m: float) -> Line:
    """Line through the origin holding the duals of all lines of slope m.

    Pass VERTICAL (math.inf) for the family of vertical lines.  The carrier
    is perpendicular to the family: y = (-1/m)x, or y = 0 for vertical
    families, or x = 0 for horizontal ones.
    """
    if math.isinf(m):
        return Line(0.0, 1.0, 0.0)
    if m == 0.0:
        return Line(1.0, 0.0, 0.0)
    return Line(1.0 / m, 1.0, 0.0)


def angle_tangent_between(l1: Line, l2: Line) -> AngleMeasure:
    """Tangent of the angle from l1 to l2, as an AngleMeasure.

    In slope form this is (m2 - m1) / (1 + m1*m2); the general-form expression
    below agrees and also covers vertical lines.  Perpendicular pairs return
    the right-angle flag instead of a value.
    """
    num = l1.a * l2.b - l2.a * l1.b
    den = l1.a * l2.a + l1.b * l2.b
    if abs(den) <= 1e-12:
        return AngleMeasure(vertical=True)
    return AngleMeasure(tan_value=num / den)
