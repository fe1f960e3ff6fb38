"""Figure rendering: the six reference pictures and user-curve plots.

Figures 1-4 overlay an example curve with its computed dual; figure 5 is
the four-piece curve on its own and figure 6 that curve's dual path.  All
rendering is pinned for byte determinism: fixed Agg backend, fixed SVG hash
salt, no timestamps in the output metadata.

Dual pieces can run off toward infinity next to an excluded origin-tangent
parameter, so the view box is computed from the original curve's bounding
box plus only those dual samples within three diagonals of it; where a dual
polyline leaves the view on its way to a gap, a marker is drawn at the
crossing point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .curves import LinearSegment, PiecewiseCurve, SmoothArc
from .dualizer import DualizationResult, dualize_curve
from .errors import InvalidParam
from .corpus import make_example
from .geometry import Point

_HASH_SALT = "dual-curve-figures"
BOX_DIAGONALS = 3.0
MARGIN = 0.10

ORIGINAL_STYLE = {"color": "#1f77b4", "linewidth": 1.6, "linestyle": "-"}
DUAL_STYLE = {"color": "#d62728", "linewidth": 1.4, "linestyle": "--"}
POINT_STYLE = {"color": "#d62728", "marker": "o", "markersize": 5, "linestyle": ""}
GAP_STYLE = {"color": "#d62728", "marker": "v", "markersize": 6, "linestyle": ""}


@dataclass(frozen=True)
class FigureData:
    """Everything a figure plots, exposed so tests can audit the data."""

    title: str
    original: PiecewiseCurve | None
    original_polylines: tuple[tuple[Point, ...], ...]
    dual: DualizationResult | None


def _sample_piece(piece, n: int) -> tuple[Point, ...]:
    if isinstance(piece, LinearSegment):
        return (piece.p_start, piece.p_end)
    pts = []
    for k in range(n):
        a = piece.x_end if k == n - 1 else piece.x_start + (piece.x_end - piece.x_start) * k / (n - 1)
        pts.append(Point(a, piece.value(a)))
    return tuple(pts)


def curve_polylines(curve: PiecewiseCurve, n: int = 201) -> tuple[tuple[Point, ...], ...]:
    return tuple(_sample_piece(piece, n) for piece in curve.pieces)


def figure_data(figure_id: int, n_samples: int = 201) -> FigureData:
    """Sampled content of one of the six reference figures."""
    if figure_id not in (1, 2, 3, 4, 5, 6):
        raise InvalidParam(f"figure id must be 1..6, got {figure_id}")
    if figure_id <= 4:
        p = {3: 4.0}.get(figure_id)
        example = make_example(figure_id, p)
        curve = example.original
        return FigureData(
            title=f"Example {figure_id}: curve and dual curve",
            original=curve,
            original_polylines=curve_polylines(curve, n_samples),
            dual=dualize_curve(curve, n_samples),
        )
    curve = make_example(5).original
    if figure_id == 5:
        return FigureData(
            title="Example 5: the original curve",
            original=curve,
            original_polylines=curve_polylines(curve, n_samples),
            dual=None,
        )
    return FigureData(
        title="Example 5: the dual curve",
        original=None,
        original_polylines=(),
        dual=dualize_curve(curve, n_samples),
    )


# ---------------------------------------------------------------------------
# geometry of the view box

def _bbox(points) -> tuple[float, float, float, float]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def _view_box(data: FigureData) -> tuple[float, float, float, float]:
    anchor_pts = [p for line in data.original_polylines for p in line]
    if not anchor_pts and data.dual is not None:
        # dual-only figure: a gap-free dual is bounded and anchors itself;
        # otherwise judge runaway samples against the source curve
        if all(not piece.gaps for piece in data.dual.pieces):
            anchor_pts = [p for piece in data.dual.pieces for p in piece.samples]
        else:
            anchor_pts = [p for line in curve_polylines(data.dual.source, 33) for p in line]
    x0, y0, x1, y1 = _bbox(anchor_pts)
    diag = math.hypot(x1 - x0, y1 - y0)
    if diag == 0.0:
        diag = 1.0
    reach = BOX_DIAGONALS * diag
    pts = list(anchor_pts)
    if data.dual is not None:
        for piece in data.dual.pieces:
            for p in piece.samples:
                if x0 - reach <= p.x <= x1 + reach and y0 - reach <= p.y <= y1 + reach:
                    pts.append(p)
    bx0, by0, bx1, by1 = _bbox(pts)
    mx = MARGIN * (bx1 - bx0 or 1.0)
    my = MARGIN * (by1 - by0 or 1.0)
    return bx0 - mx, by0 - my, bx1 + mx, by1 + my


def _inside(p: Point, box) -> bool:
    x0, y0, x1, y1 = box
    return x0 <= p.x <= x1 and y0 <= p.y <= y1


def _clip_to_box(inside_pt: Point, outside_pt: Point, box) -> Point:
    """Where the segment from an in-box point to an out-of-box point exits."""
    x0, y0, x1, y1 = box
    dx = outside_pt.x - inside_pt.x
    dy = outside_pt.y - inside_pt.y
    t_exit = 1.0
    for d, lo, hi, c in ((dx, x0, x1, inside_pt.x), (dy, y0, y1, inside_pt.y)):
        if d > 0.0:
            t_exit = min(t_exit, (hi - c) / d)
        elif d < 0.0:
            t_exit = min(t_exit, (lo - c) / d)
    t_exit = max(t_exit, 0.0)
    return Point(inside_pt.x + t_exit * dx, inside_pt.y + t_exit * dy)


def _merged_order(piece) -> list[tuple[float, Point | None]]:
    """Samples and gaps of a sampled piece interleaved in traversal order."""
    order = sorted(
        [(a, p) for a, p in zip(piece.params, piece.samples)] + [(g, None) for g in piece.gaps],
        key=lambda item: item[0],
    )
    if piece.params[0] > piece.params[-1]:
        order.reverse()
    return order


def _gap_markers(piece, box) -> list[Point]:
    """Marker positions where the dual polyline breaks off toward a gap.

    Walking away from the gap, the first in-box sample carries the marker;
    when samples nearer the gap already left the box, the marker moves to
    the crossing where the polyline exits toward them.
    """
    markers: list[Point] = []
    if piece.kind != "sampled-arc" or not piece.gaps:
        return markers
    order = _merged_order(piece)
    for i, (_, p) in enumerate(order):
        if p is not None:
            continue
        for direction in (-1, 1):
            j = i + direction
            gapward: Point | None = None
            while 0 <= j < len(order) and order[j][1] is not None:
                pt = order[j][1]
                if _inside(pt, box):
                    markers.append(pt if gapward is None else _clip_to_box(pt, gapward, box))
                    break
                gapward = pt
                j += direction
    return markers


# ---------------------------------------------------------------------------
# rendering

def _plot_runs(ax, piece, box) -> None:
    """Plot a sampled dual piece as polyline runs split at gaps, clipped."""
    runs: list[list[Point]] = [[]]
    for _, p in _merged_order(piece):
        if p is None:
            if runs[-1]:
                runs.append([])
        else:
            runs[-1].append(p)
    for run in runs:
        if len(run) < 2:
            if run and _inside(run[0], box):
                ax.plot([run[0].x], [run[0].y], **POINT_STYLE)
            continue
        xs: list[float] = []
        ys: list[float] = []
        prev_in = _inside(run[0], box)
        for i, p in enumerate(run):
            now_in = _inside(p, box)
            if now_in:
                if not prev_in and i > 0:
                    entry = _clip_to_box(p, run[i - 1], box)
                    xs.append(entry.x)
                    ys.append(entry.y)
                xs.append(p.x)
                ys.append(p.y)
            else:
                if prev_in and xs:
                    exitp = _clip_to_box(run[i - 1], p, box)
                    xs.append(exitp.x)
                    ys.append(exitp.y)
                    ax.plot(xs, ys, **DUAL_STYLE)
                    xs, ys = [], []
            prev_in = now_in
        if xs:
            ax.plot(xs, ys, **DUAL_STYLE)


def render_figure(figure_id: int, out_path: str, n_samples: int = 201) -> FigureData:
    data = figure_data(figure_id, n_samples)
    render_figure_data(data, out_path)
    return data


def render_curve_and_dual(
    curve: PiecewiseCurve, result: DualizationResult, out_path: str, n_samples: int = 201
) -> None:
    data = FigureData(
        title="curve and dual curve",
        original=curve,
        original_polylines=curve_polylines(curve, n_samples),
        dual=result,
    )
    render_figure_data(data, out_path)


def render_figure_data(data: FigureData, out_path: str) -> None:
    plt.rcParams["svg.hashsalt"] = _HASH_SALT
    box = _view_box(data)
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    try:
        for line in data.original_polylines:
            ax.plot([p.x for p in line], [p.y for p in line], **ORIGINAL_STYLE)
        if data.dual is not None:
            for piece in data.dual.pieces:
                if piece.kind == "sampled-arc":
                    _plot_runs(ax, piece, box)
                    for marker in _gap_markers(piece, box):
                        ax.plot([marker.x], [marker.y], **GAP_STYLE)
                elif piece.kind == "segment":
                    ax.plot(
                        [p.x for p in piece.samples],
                        [p.y for p in piece.samples],
                        **DUAL_STYLE,
                    )
                else:
                    pt = piece.samples[0]
                    if _inside(pt, box):
                        ax.plot([pt.x], [pt.y], **POINT_STYLE)
        ax.set_xlim(box[0], box[2])
        ax.set_ylim(box[1], box[3])
        ax.set_aspect("equal", adjustable="box")
        ax.grid(True, linewidth=0.4, alpha=0.4)
        ax.axhline(0.0, color="#555555", linewidth=0.7)
        ax.axvline(0.0, color="#555555", linewidth=0.7)
        ax.set_title(data.title)
        fig.savefig(out_path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
