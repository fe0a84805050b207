"""Command-line interface: build, multiply, verify and report tilings as JSON."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .builders import CLOSED_MANIFOLDS, EXAMPLES, build_example
from .cayley import cells, cell_vertices, export_svg, parse_weights, sweep, uniform_weights
from .core import (
    barycentric_subdivision,
    complex_from_json,
    complex_to_json,
    euler_characteristic,
    f_vector,
    h_vector_complex,
)
from .errors import DimensionGuard, MorseTileError
from .product_complex import product_tiling
from .staircases import enumerate_staircases
from .tilings import analyze, tiled_set_from_json

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(args, obj):
    text = dumps(obj)
    if args.out:
        Path(args.out).write_text(text)
    if not args.quiet:
        sys.stdout.write(text)


def _load(path: str) -> dict:
    data = json.loads(Path(path).read_text())
    # accept the full output of `example` and `product` as well as a bare tiling
    if isinstance(data, dict) and isinstance(data.get("tiling"), dict):
        return data["tiling"]
    return data


def _tiling_payload(S, closed_manifold: bool) -> dict:
    data = S.to_json()
    data["closed_manifold"] = closed_manifold
    return data


def _figure(args, report):
    if getattr(args, "figure", None):
        from .plotting import plot_vectors

        plot_vectors(report.h, report.c, args.figure)


def cmd_example(args) -> int:
    params = {k: v for k, v in (("n", args.n), ("k", args.k), ("m", args.m),
                                ("variant", args.variant)) if v is not None}
    S = build_example(args.name, max_dim=args.max_dim, **params)
    hint = args.name in CLOSED_MANIFOLDS
    report = analyze(S, closed_manifold_hint=hint)
    out = {"tiling": _tiling_payload(S, hint), "report": report.to_json()}
    if "formula_comparison" in S.meta:
        out["formula_comparison"] = S.meta["formula_comparison"]
    _emit(args, out)
    _figure(args, report)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_product(args) -> int:
    S1 = tiled_set_from_json(_load(args.first))
    S2 = tiled_set_from_json(_load(args.second))
    P = product_tiling(S1, S2, h_tiling=args.h_tiling, max_dim=args.max_dim)
    report = analyze(P)
    _emit(args, {"tiling": _tiling_payload(P, False), "report": report.to_json()})
    _figure(args, report)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_verify(args) -> int:
    data = _load(args.file)
    S = tiled_set_from_json(data)
    hint = args.closed_manifold or bool(data.get("closed_manifold", False))
    report = analyze(S, closed_manifold_hint=hint)
    _emit(args, report.to_json())
    _figure(args, report)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_vectors(args) -> int:
    data = _load(args.file)
    K = complex_from_json(data.get("complex", data))
    out = {"f": f_vector(K).tolist(), "h_complex": h_vector_complex(K).tolist(),
           "euler": euler_characteristic(K), "dimension": K.dimension}
    if "tiles" in data:
        report = analyze(tiled_set_from_json(data))
        out["h"], out["c"] = report.h, report.c
        _figure(args, report)
    _emit(args, out)
    return EXIT_OK


def cmd_staircases(args) -> int:
    if args.n + args.m > args.max_dim:
        raise DimensionGuard(f"n + m exceeds {args.max_dim}")
    _emit(args, [{"e": list(I.e), "intervals": [list(iv) for iv in I.intervals]}
                 for I in enumerate_staircases(args.n, args.m)])
    return EXIT_OK


def cmd_subdivide(args) -> int:
    K = complex_from_json(_load(args.file))
    Sd = barycentric_subdivision(K)
    out = complex_to_json(Sd)
    out["labels"] = {str(v): list(face) for v, face in sorted(Sd.labels.items())}
    _emit(args, out)
    return EXIT_OK


def cmd_mixdec(args) -> int:
    if args.n + args.m > args.max_dim:
        raise DimensionGuard(f"n + m exceeds {args.max_dim}")
    alpha = parse_weights(args.alpha) if args.alpha else uniform_weights(args.n)
    if len(alpha) != args.n + 1:
        raise ValueError(f"expected {args.n + 1} weights")
    out = {"n": args.n, "m": args.m, "alpha": [str(a) for a in alpha],
           "cells": [{"staircase": [list(iv) for iv in c.staircase.intervals],
                      "vertices": [[str(x) for x in v] for v in cell_vertices(c)]}
                     for c in cells(args.n, args.m, alpha)]}
    ok = True
    if args.grid_denominator:
        res = sweep(args.n, args.m, args.grid_denominator, alpha)
        out["sweep"] = {"points": res.points, "covered": res.covered,
                        "pieces_partition": res.pieces_partition,
                        "disjoint_interiors": res.disjoint_interiors,
                        "filtration": res.filtration, "witness": res.witness}
        ok = res.ok
    if args.svg:
        Path(args.svg).write_text(export_svg(args.n, args.m, alpha))
    if args.figure:
        from .plotting import plot_mixed_decomposition

        if args.m == 2:
            plot_mixed_decomposition(args.n, args.figure, alpha)
    _emit(args, out)
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="morsetile", description=__doc__)
    p.add_argument("--out", help="also write the JSON output to this file")
    p.add_argument("--max-dim", type=int, default=8, help="dimension guard (default 8)")
    p.add_argument("--quiet", action="store_true", help="do not print JSON to stdout")
    # the same flags are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS)
    common.add_argument("--max-dim", type=int, default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("example", parents=[common], help="build and verify a named example")
    e.add_argument("name", choices=sorted(EXAMPLES))
    e.add_argument("--n", type=int)
    e.add_argument("--k", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--variant", choices=["top", "bottom"])
    e.add_argument("--figure", help="PNG with h- and c-vector bar charts")
    e.set_defaults(func=cmd_example)

    pr = sub.add_parser("product", parents=[common], help="product of two tiling files")
    pr.add_argument("first")
    pr.add_argument("second")
    pr.add_argument("--h-tiling", action="store_true", help="require an all-basic product")
    pr.add_argument("--figure")
    pr.set_defaults(func=cmd_product)

    v = sub.add_parser("verify", parents=[common], help="verify a tiling file")
    v.add_argument("file")
    v.add_argument("--closed-manifold", action="store_true",
                   help="assert the complex is a closed manifold")
    v.add_argument("--figure")
    v.set_defaults(func=cmd_verify)

    vec = sub.add_parser("vectors", parents=[common], help="f-, h-vectors and Euler characteristic")
    vec.add_argument("file")
    vec.add_argument("--figure")
    vec.set_defaults(func=cmd_vectors)

    st = sub.add_parser("staircases", parents=[common], help="list the staircases I(n, m)")
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--m", type=int, required=True)
    st.set_defaults(func=cmd_staircases)

    sd = sub.add_parser("subdivide", parents=[common], help="barycentric subdivision of a complex file")
    sd.add_argument("file")
    sd.set_defaults(func=cmd_subdivide)

    md = sub.add_parser("mixdec", parents=[common], help="mixed decomposition of the m-simplex")
    md.add_argument("--n", type=int, required=True)
    md.add_argument("--m", type=int, default=2)
    md.add_argument("--alpha", help="weights p0/q0,p1/q1,... (default uniform)")
    md.add_argument("--svg", help="write the decomposition as SVG (m = 2 only)")
    md.add_argument("--grid-denominator", type=int, help="run the exact grid sweep")
    md.add_argument("--figure", help="PNG rendering (m = 2 only)")
    md.set_defaults(func=cmd_mixdec)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MorseTileError as exc:
        sys.stdout.write(dumps(exc.to_json()))
        return EXIT_FAILED
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"morsetile: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
