"""Curve description files: a small JSON schema for building curves on disk.

Schema (all keys lowercase):

    {
      "pieces": [
        {"type": "expr", "expression": "x^2/(4*p)", "domain": [-4, 4],
         "params": {"p": 1}, "inflectional": false},
        {"type": "segment", "start": [0, 1], "end": [1, 0]},
        {"type": "pnorm_circle", "params": {"p": 4}}
      ],
      "closed": false,
      "sampling": {"n": 201, "refine": true}
    }

A piece whose type names a builtin family splices that family's pieces into
the list in place.  "domain" is traversal-ordered, so [4, -4] walks the arc
right to left.  Every error is raised as SpecFileError with the offending
location spelled out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .curves import (
    LinearSegment,
    PiecewiseCurve,
    SmoothArc,
    build_piecewise_curve,
    make_family,
)
from .errors import DualityError, ParseError, SpecFileError
from .expr import parse_expression
from .geometry import Point

DEFAULT_N = 201


@dataclass(frozen=True)
class CurveSpec:
    curve: PiecewiseCurve
    n_samples: int
    refine: bool


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecFileError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _pair(value, where: str) -> tuple[float, float]:
    if not isinstance(value, list) or len(value) != 2:
        raise SpecFileError(f"{where}: expected a 2-element array")
    return _number(value[0], f"{where}[0]"), _number(value[1], f"{where}[1]")


def _params(entry: dict, where: str) -> dict[str, float]:
    raw = entry.get("params", {})
    if not isinstance(raw, dict):
        raise SpecFileError(f"{where}.params: expected an object")
    return {k: _number(v, f"{where}.params.{k}") for k, v in raw.items()}


def _expr_piece(entry: dict, where: str) -> SmoothArc:
    src = entry.get("expression")
    if not isinstance(src, str):
        raise SpecFileError(f"{where}.expression: expected a string")
    try:
        tree = parse_expression(src)
    except ParseError as exc:
        raise SpecFileError(f"{where}.expression: {exc}") from exc
    if "domain" not in entry:
        raise SpecFileError(f"{where}.domain: required for expr pieces")
    x_start, x_end = _pair(entry["domain"], f"{where}.domain")
    inflectional = entry.get("inflectional", False)
    if not isinstance(inflectional, bool):
        raise SpecFileError(f"{where}.inflectional: expected true or false")
    params = _params(entry, where) or None
    try:
        return SmoothArc(tree, x_start, x_end, params, inflectional=inflectional)
    except ValueError as exc:
        raise SpecFileError(f"{where}: {exc}") from exc


def _segment_piece(entry: dict, where: str) -> LinearSegment:
    for key in ("start", "end"):
        if key not in entry:
            raise SpecFileError(f"{where}.{key}: required for segment pieces")
    sx, sy = _pair(entry["start"], f"{where}.start")
    ex, ey = _pair(entry["end"], f"{where}.end")
    try:
        return LinearSegment(Point(sx, sy), Point(ex, ey))
    except ValueError as exc:
        raise SpecFileError(f"{where}: {exc}") from exc


def load_curve_spec(path: str) -> CurveSpec:
    """Read and validate a curve description file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return build_from_document(doc, origin=path)


def build_from_document(doc, origin: str = "<spec>") -> CurveSpec:
    if not isinstance(doc, dict):
        raise SpecFileError(f"{origin}: top level must be an object")
    raw_pieces = doc.get("pieces")
    if not isinstance(raw_pieces, list) or not raw_pieces:
        raise SpecFileError(f"{origin}: pieces must be a non-empty array")

    pieces = []
    family_closed: bool | None = None
    for i, entry in enumerate(raw_pieces):
        where = f"{origin}: pieces[{i}]"
        if not isinstance(entry, dict):
            raise SpecFileError(f"{where}: expected an object")
        ptype = entry.get("type")
        if not isinstance(ptype, str):
            raise SpecFileError(f"{where}.type: required")
        if ptype == "expr":
            pieces.append(_expr_piece(entry, where))
        elif ptype == "segment":
            pieces.append(_segment_piece(entry, where))
        else:
            try:
                family = make_family(ptype, **_params(entry, where))
            except DualityError as exc:
                raise SpecFileError(f"{where}: {exc}") from exc
            pieces.extend(family.pieces)
            if len(raw_pieces) == 1:
                family_closed = family.closed

    closed = doc.get("closed")
    if closed is None:
        closed = family_closed if family_closed is not None else False
    if not isinstance(closed, bool):
        raise SpecFileError(f"{origin}: closed must be true or false")

    sampling = doc.get("sampling", {})
    if not isinstance(sampling, dict):
        raise SpecFileError(f"{origin}: sampling must be an object")
    n = sampling.get("n", DEFAULT_N)
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise SpecFileError(f"{origin}: sampling.n must be an integer >= 2")
    refine = sampling.get("refine", True)
    if not isinstance(refine, bool):
        raise SpecFileError(f"{origin}: sampling.refine must be true or false")

    try:
        curve = build_piecewise_curve(pieces, closed=closed)
    except DualityError as exc:
        raise SpecFileError(f"{origin}: {type(exc).__name__}: {exc}") from exc
    return CurveSpec(curve=curve, n_samples=n, refine=refine)
