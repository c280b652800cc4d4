"""Command-line interface.

Exit codes: 0 success or valid, 1 domain failure (invalid coloring, failed
search, malformed document), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .baselines import Priority, PriorityHeuristic, greedy_color
from .bounds import color_bounds, near_hexagonal_basis, near_square_basis
from .coloring import Method, color_window
from .document import ColoringDocument, DocumentError, document_from_coloring, render_ppm
from .geometry import GeneratorBasis, SingularBasisError, is_reduced
from .hops import RadioParams, build_hop_field
from .search import SearchError, find_optimal
from .validity import check_validity, check_vc1, check_vc2, window_conflicts


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _params(args) -> RadioParams:
    try:
        r = Fraction(args.range)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"range must be a decimal number, got {args.range!r}") from None
    if r < 1:
        raise UsageError("range must be >= 1")
    if args.hops < 1:
        raise UsageError("hops must be >= 1")
    return RadioParams(r, args.hops)


def _vectors(text: str) -> GeneratorBasis:
    try:
        x1, y1, x2, y2 = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError("vectors must be four integers x1,y1,x2,y2") from None
    try:
        return GeneratorBasis.from_coords(x1, y1, x2, y2)
    except SingularBasisError as exc:
        raise UsageError(str(exc)) from None


def _fmt(v) -> str:
    return f"({v[0]}, {v[1]})"


def cmd_solve(args) -> int:
    params = _params(args)
    t0 = time.perf_counter()
    try:
        res = find_optimal(params)
    except SearchError as exc:
        raise DomainError(str(exc)) from None
    elapsed = time.perf_counter() - t0
    b = color_bounds(params)
    report = {
        "range": args.range,
        "hops": params.hops,
        "vectors": res.basis.as_list(),
        "num_colors": res.num_colors,
        "lower_bound": b.lower,
        "upper_bound": b.upper,
        "candidates_examined": res.candidates_examined,
        "pairs_scanned": res.pairs_scanned,
        "validity_checks": res.validity_checks,
        "validity_method": res.validity_method_used.value,
        "seconds": round(elapsed, 4),
    }
    if args.emit == "json":
        print(json.dumps(report))
    else:
        print(f"range {args.range}  hops {params.hops}")
        print(f"vectors {_fmt(res.basis.u1)} {_fmt(res.basis.u2)}")
        print(f"colors {res.num_colors}")
        lower = "n/a" if b.lower is None else f"{b.lower:.3f}"
        print(f"bounds lower {lower}  upper {b.upper:.3f}")
        print(f"candidates {res.candidates_examined}  scanned {res.pairs_scanned}  "
              f"checks {res.validity_checks} ({res.validity_method_used.value})")
        print(f"time {elapsed:.3f} s")
    return 0


def _write_document(doc: ColoringDocument, out: str, csv: str | None) -> None:
    Path(out).write_text(doc.to_json())
    if csv:
        grid = doc.grid()
        Path(csv).write_text("\n".join(",".join(str(c) for c in row) for row in grid) + "\n")


def cmd_color(args) -> int:
    params = _params(args)
    if args.width < 1 or args.height < 1:
        raise UsageError("width and height must be >= 1")
    field = build_hop_field(params)
    if args.vectors:
        basis = _vectors(args.vectors)
        verdict = check_validity(basis, params, field)
        if not verdict.valid:
            print(f"invalid vectors: lattice point {_fmt(verdict.witness)} is within {params.hops} hops")
            return 1
    else:
        try:
            basis = find_optimal(params).basis
        except SearchError as exc:
            raise DomainError(str(exc)) from None
    origin = _origin(args.origin)
    coloring = color_window(origin, args.width, args.height, basis, Method(args.method), params)
    conflicts = window_conflicts(coloring, field, limit=1)
    if conflicts:
        a, b = conflicts[0]
        print(f"window check failed: {_fmt(a)} and {_fmt(b)} share a color")
        return 1
    doc = document_from_coloring(coloring, args.range)
    _write_document(doc, args.out, args.csv)
    print(f"wrote {args.out}: {coloring.width}x{coloring.height}, {coloring.distinct_colors()} "
          f"distinct colors of {basis.d}")
    return 0


def _origin(text: str):
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError("origin must be x,y") from None
    return x, y


def cmd_verify(args) -> int:
    params = _params(args)
    basis = _vectors(args.vectors)
    field = build_hop_field(params)
    if args.method == "vc2":
        if not params.above_sqrt2:
            raise UsageError("VC2 requires R > sqrt(2)")
        if not is_reduced(basis):
            raise UsageError("VC2 requires reduced basis")
        verdict = check_vc2(basis, params, field)
    elif args.method == "vc1":
        verdict = check_vc1(basis, params, field)
    else:
        verdict = check_validity(basis, params, field)
    if verdict.valid:
        print(f"valid ({verdict.method.value}), {basis.d} colors")
        return 0
    print(f"invalid ({verdict.method.value}): lattice point {_fmt(verdict.witness)} within {params.hops} hops")
    return 1


def cmd_greedy(args) -> int:
    params = _params(args)
    if args.width < 1 or args.height < 1:
        raise UsageError("width and height must be >= 1")
    heur = PriorityHeuristic(Priority(args.priority), args.seed if args.priority == "random" else None)
    coloring = greedy_color(args.width, args.height, params, heur)
    doc = document_from_coloring(coloring, args.range)
    _write_document(doc, args.out, args.csv)
    print(f"{coloring.num_colors} colors")
    return 0


def cmd_bounds(args) -> int:
    params = _params(args)
    b = color_bounds(params)
    hexb = near_hexagonal_basis(params)
    sq = near_square_basis(params)
    print("lower " + ("n/a (R <= sqrt 2)" if b.lower is None else f"{b.lower:.3f}"))
    print(f"upper {b.upper:.3f}")
    print(f"near-hexagonal {_fmt(hexb.u1)} {_fmt(hexb.u2)} det {hexb.d}")
    print(f"near-square {_fmt(sq.u1)} {_fmt(sq.u2)} det {sq.d}")
    return 0


def cmd_render(args) -> int:
    try:
        doc = ColoringDocument.from_json(Path(args.input).read_text())
    except (OSError, DocumentError) as exc:
        raise DomainError(f"cannot read document: {exc}") from None
    Path(args.out).write_bytes(render_ppm(doc, args.block))
    print(f"wrote {args.out}")
    return 0


def cmd_tables(args) -> int:
    from . import reproduce

    if args.which == 2:
        rows = reproduce.optimum_rows()
        print(f"{'range':>5} {'h':>2} {'vectors':<24} {'colors':>6} {'ref':>5}")
        for r in rows:
            vec = f"{_fmt(r.vectors[0])} {_fmt(r.vectors[1])}"
            print(f"{r.range:>5} {r.hops:>2} {vec:<24} {r.computed:>6} {r.published:>5}  {'PASS' if r.ok else 'FAIL'}")
        return 0 if all(r.ok for r in rows) else 1
    if args.which == 1:
        print(f"{'grid':>5} {'priority':<9} {'range':>5} {'colors':>6} {'ref':>5}")
        for r in reproduce.greedy_rows(args.seed):
            extra = f"  (anti-diagonal sweep: {r.alternative})" if r.alternative is not None else ""
            print(f"{r.side:>2}x{r.side:<2} {r.priority:<9} {r.range:>5} {r.computed:>6} {r.published:>5}{extra}")
        return 0
    print(f"{'range':>5} {'grid':>5} {'lattice':>7} {'ref':>4} {'line':>5} {'ref':>4}")
    for r in reproduce.comparison_rows():
        print(f"{r.range:>5} {r.side:>2}x{r.side:<2} {r.lattice:>7} {r.lattice_published:>4} "
              f"{r.greedy:>5} {r.greedy_published:>4}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grid-chroma", description="Optimal periodic h-hop colorings of grids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def radio(p):
        p.add_argument("--range", required=True, help="radio range in grid steps, decimal")
        p.add_argument("--hops", type=int, required=True)

    p = sub.add_parser("solve", help="search optimal generator vectors")
    radio(p)
    p.add_argument("--emit", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("color", help="color a window and write a document")
    radio(p)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--vectors", help="x1,y1,x2,y2 (use --vectors=-1,... for a leading minus)")
    p.add_argument("--method", choices=["ncc1", "ncc2"], default="ncc2")
    p.add_argument("--origin", default="0,0")
    p.add_argument("--out", required=True)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check the validity of generator vectors")
    radio(p)
    p.add_argument("--vectors", required=True)
    p.add_argument("--method", choices=["vc1", "vc2", "auto"], default="auto")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("greedy", help="FirstFit coloring of a finite grid")
    radio(p)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--priority", choices=[k.value for k in Priority], default="line")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("bounds", help="analytic bounds and constructive bases")
    radio(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("render", help="render a document as a PPM image")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--block", type=int, default=8)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("tables", help="regenerate the reference tables")
    p.add_argument("--which", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
