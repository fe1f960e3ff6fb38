"""Command line interface.

Subcommands: dualize (curve file to CSV/SVG/structured dual output), verify
(run the check suites on a builtin example or a curve file), figure (render
one of the six reference figures), legendre (tabulate the slope-intercept
transform of an arc).

Exit codes: 0 success, 1 input error (bad flags, unreadable or invalid
curve file), 2 computation error (the mathematics refused: line through the
origin, samples all excluded, derivative not invertible), 3 verification
failure (checks ran and at least one failed).
"""

from __future__ import annotations

import argparse
import json
import sys

from .curves import SmoothArc
from .dualizer import DualizationResult, dualize_curve
from .errors import DualityError, InvalidExponent, InvalidParam, SpecFileError
from .legendre import (
    bridge_to_dual,
    invertible_from_numeric,
    invertible_pnorm_arc,
    legendre_at,
    legendre_pnorm_closed_form,
)
from .report import run_verification, verify_example
from .specfile import load_curve_spec

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_COMPUTE = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract reserves 2
    # for computation errors and wants 1 for all input problems
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _float_pair(values) -> tuple[float, float]:
    return float(values[0]), float(values[1])


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dualcurve", description="Dual curves of piecewise plane curves")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dualize", help="compute the dual of a curve file")
    d.add_argument("--input", required=True, help="curve description file (JSON)")
    d.add_argument("--samples", type=int, default=None, help="samples per arc (default from file, else 201)")
    d.add_argument("--format", choices=("csv", "svg", "structured"), default="csv")
    d.add_argument("--output", default="-", help="output path, - for stdout (svg needs a path)")

    v = sub.add_parser("verify", help="run the verification suites")
    target = v.add_mutually_exclusive_group(required=True)
    target.add_argument("--example", type=int, choices=(1, 2, 3, 4, 5), help="builtin example id")
    target.add_argument("--input", help="curve description file (JSON)")
    v.add_argument("--p", type=float, default=None, help="parameter for examples 2 and 3")
    v.add_argument("--samples", type=int, default=201)
    v.add_argument("--tol", type=float, default=1.0, help="multiplier applied to every tolerance")
    v.add_argument("--output", default=None, help="also write the report as JSON to this path")

    f = sub.add_parser("figure", help="render one of the six reference figures")
    f.add_argument("n", type=int, choices=(1, 2, 3, 4, 5, 6), help="figure number")
    f.add_argument("--samples", type=int, default=201)
    f.add_argument("--output", default=None, help="output SVG path (default figure<n>.svg)")

    lg = sub.add_parser("legendre", help="tabulate the slope-intercept transform of an arc")
    src = lg.add_mutually_exclusive_group(required=True)
    src.add_argument("--p", type=float, help="use the first-quadrant unit p-circle arc")
    src.add_argument("--input", help="curve file holding a single expr piece")
    lg.add_argument("--slope-range", nargs=2, type=float, default=None, metavar=("LO", "HI"))
    lg.add_argument("--samples", type=int, default=25)
    lg.add_argument("--closed-form", action="store_true",
                    help="add the p-circle closed-form column and deltas (needs --p)")
    lg.add_argument("--format", choices=("csv", "structured"), default="csv")
    lg.add_argument("--output", default="-", help="output path, - for stdout")
    return parser


# ---------------------------------------------------------------------------
# output writers

def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _write_text(path: str, text: str) -> None:
    out, owned = _open_out(path)
    try:
        out.write(text)
    finally:
        if owned:
            out.close()


def dual_result_csv(result: DualizationResult) -> str:
    lines = ["piece_index,kind,point_index,x,y,gap_flag"]
    for piece_index, piece in enumerate(result.pieces):
        if piece.kind == "sampled-arc":
            # merge surviving samples and gap markers back into traversal
            # order so the flag lands on the first sample after each gap
            ordered = sorted(
                [(a, p) for a, p in zip(piece.params, piece.samples)]
                + [(g, None) for g in piece.gaps],
                key=lambda item: item[0],
                reverse=piece.params[0] > piece.params[-1],
            )
            previous_was_gap = False
            point_index = 0
            for a, p in ordered:
                if p is None:
                    previous_was_gap = True
                    continue
                flag = 1 if previous_was_gap else 0
                lines.append(f"{piece_index},{piece.kind},{point_index},{p.x!r},{p.y!r},{flag}")
                point_index += 1
                previous_was_gap = False
        else:
            for point_index, p in enumerate(piece.samples):
                lines.append(f"{piece_index},{piece.kind},{point_index},{p.x!r},{p.y!r},0")
    return "\n".join(lines) + "\n"


def dual_result_document(result: DualizationResult, n_samples: int) -> dict:
    return {
        "n_samples": n_samples,
        "piece_count": len(result.pieces),
        "pieces": [
            {
                "source_index": piece.source_index,
                "kind": piece.kind,
                "samples": [[p.x, p.y] for p in piece.samples],
                "params": list(piece.params) if piece.params is not None else None,
                "gaps": list(piece.gaps),
            }
            for piece in result.pieces
        ],
    }


# ---------------------------------------------------------------------------
# subcommands

def cmd_dualize(args) -> int:
    try:
        spec = load_curve_spec(args.input)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    n = args.samples if args.samples is not None else spec.n_samples
    if n < 2:
        print("error: --samples must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "svg" and args.output == "-":
        print("error: svg output needs --output PATH", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = dualize_curve(spec.curve, n, refine=spec.refine)
    except DualityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.format == "csv":
        _write_text(args.output, dual_result_csv(result))
    elif args.format == "structured":
        _write_text(args.output, json.dumps(dual_result_document(result, n), indent=2) + "\n")
    else:
        from .figures import render_curve_and_dual

        render_curve_and_dual(spec.curve, result, args.output, n)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < 2:
        print("error: --samples must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    if args.tol <= 0.0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.example is not None:
            report = verify_example(args.example, p=args.p,
                                    n_samples=args.samples, tol_multiplier=args.tol)
        else:
            spec = load_curve_spec(args.input)
            report = run_verification(spec.curve, target=args.input,
                                      n_samples=args.samples, tol_multiplier=args.tol)
    except (SpecFileError, InvalidParam) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DualityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    for row in report.rows:
        status = "PASS" if row.passed else "FAIL"
        print(f"{status}  {row.name}  measured={row.measured:.3e}  tolerance={row.tolerance:.3e}")
    print(f"{'all checks passed' if report.all_passed else 'FAILURES present'}: {report.target}")
    if args.output:
        _write_text(args.output, json.dumps(report.to_document(), indent=2) + "\n")
    return EXIT_OK if report.all_passed else EXIT_VERIFY


def cmd_figure(args) -> int:
    out = args.output if args.output else f"figure{args.n}.svg"
    if args.samples < 2:
        print("error: --samples must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    try:
        from .figures import render_figure

        render_figure(args.n, out, args.samples)
    except DualityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    print(f"wrote {out}")
    return EXIT_OK


def _legendre_arc(args):
    if args.p is not None:
        if args.slope_range is not None:
            return invertible_pnorm_arc(args.p, _float_pair(args.slope_range))
        return invertible_pnorm_arc(args.p)
    spec = load_curve_spec(args.input)
    arcs = [piece for piece in spec.curve.pieces if isinstance(piece, SmoothArc)]
    if len(spec.curve.pieces) != 1 or not arcs:
        raise SpecFileError(f"{args.input}: legendre needs exactly one expr piece")
    rng = _float_pair(args.slope_range) if args.slope_range is not None else None
    return invertible_from_numeric(arcs[0], rng)


def cmd_legendre(args) -> int:
    if args.samples < 2:
        print("error: --samples must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    if args.closed_form and args.p is None:
        print("error: --closed-form needs --p", file=sys.stderr)
        return EXIT_INPUT
    try:
        ia = _legendre_arc(args)
    except (SpecFileError, InvalidParam, InvalidExponent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DualityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE

    lo, hi = ia.slope_range
    rows = []
    try:
        for i in range(args.samples):
            m = lo + (hi - lo) * i / (args.samples - 1)
            lp = legendre_at(ia, m)
            u, v = (None, None)
            if lp.t != 0.0:
                q = bridge_to_dual(lp)
                u, v = q.x, q.y
            row = {"m": lp.m, "t": lp.t, "u": u, "v": v}
            if args.closed_form:
                t_closed = legendre_pnorm_closed_form(args.p, m)
                row["t_closed"] = t_closed
                row["delta"] = abs(lp.t - t_closed)
            rows.append(row)
    except DualityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE

    if args.format == "structured":
        _write_text(args.output, json.dumps({"slope_range": [lo, hi], "rows": rows}, indent=2) + "\n")
    else:
        header = ["m", "t", "u", "v"] + (["t_closed", "delta"] if args.closed_form else [])
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join("" if row[k] is None else repr(row[k]) for k in header))
        _write_text(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def entry(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "dualize": cmd_dualize,
        "verify": cmd_verify,
        "figure": cmd_figure,
        "legendre": cmd_legendre,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(entry())
