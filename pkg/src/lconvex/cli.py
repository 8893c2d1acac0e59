"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 verification failures, 4 internal consistency trap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks as checkmod
from .bigraphs import cell_graph, matching_count
from .cmtype import closed_cm_type
from .derived import derived_sequence, gorenstein_numeric, is_gorenstein, punctured_spectrum_class
from .enumeration import enumerate_ferrer, enumerate_l_convex
from .errors import (
    InternalInconsistency,
    LConvexError,
    ParseError,
    PreconditionError,
)
from .geometry import maximal_rectangles
from .minors import available_templates, edge_ring_presentation, export, inner_minors
from .poset import cm_type_oracle, join_irreducible_poset
from .projections import ferrer_project, projections
from .render import render
from .rooks import regularity, rook_count, rook_number
from .serialization import parse_input, polyomino_to_json

USAGE_EXIT = 1
PRECONDITION_EXIT = 2
VERIFY_EXIT = 3
INCONSISTENCY_EXIT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _read_polyomino(path: str):
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return parse_input(text)


def _emit(doc) -> None:
    print(json.dumps(doc, sort_keys=True))


def main(argv=None) -> int:
    parser = _Parser(prog="lconvex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", help="JSON file with cells or H/V projections, '-' for stdin")
        return p

    with_input(sub.add_parser("validate", help="parse and report basic properties"))
    with_input(sub.add_parser("project", help="projections and staircase projection"))
    rooks_p = with_input(sub.add_parser("rooks", help="rook placement counts"))
    rooks_p.add_argument("--k", type=int, default=None, help="count only this k")
    with_input(sub.add_parser("reg", help="regularity of the coordinate ring"))
    with_input(sub.add_parser("rectangles", help="maximal rectangles"))
    with_input(sub.add_parser("derived", help="derived sequence"))
    with_input(sub.add_parser("gorenstein", help="Gorenstein test with numeric criteria"))
    with_input(sub.add_parser("classify", help="Gorenstein / punctured spectrum / neither"))
    type_p = with_input(sub.add_parser("type", help="Cohen-Macaulay type"))
    type_p.add_argument("--closed", action="store_true", help="closed form only")
    type_p.add_argument("--oracle", action="store_true", help="enumeration oracle only")
    type_p.add_argument("--both", action="store_true", help="closed form and oracle")
    ideal_p = with_input(sub.add_parser("ideal", help="inner 2-minor generators"))
    ideal_p.add_argument("--format", default="plain", choices=["plain", "json", "cas-script"])
    ideal_p.add_argument("--template", default="macaulay2",
                         help=f"cas-script template ({', '.join(available_templates())})")
    render_p = with_input(sub.add_parser("render", help="draw the polyomino"))
    render_p.add_argument("--style", default="ascii", choices=["ascii", "svg"])
    enum_p = sub.add_parser("enumerate", help="stream small instances as JSON lines")
    enum_p.add_argument("--family", default="lconvex", choices=["lconvex", "ferrer"])
    enum_p.add_argument("--max-m", type=int, default=4)
    enum_p.add_argument("--max-n", type=int, default=4)
    verify_p = sub.add_parser("verify", help="run the exhaustive theorem checks")
    verify_p.add_argument("--checks", default=None,
                          help="comma-separated check names (default: all)")
    verify_p.add_argument("--max-m", type=int, default=4)
    verify_p.add_argument("--max-n", type=int, default=4)
    verify_p.add_argument("--out", default=None, help="append JSON-lines report to this file")
    verify_p.add_argument("--list", action="store_true", help="list available checks and exit")

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return INCONSISTENCY_EXIT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION_EXIT
    except LConvexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION_EXIT


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "validate":
        p = _read_polyomino(args.input)
        from .geometry import is_convex, is_l_convex

        _emit(
            {
                "cells": len(p.cells),
                "bbox": list(p.bbox),
                "convex": is_convex(p),
                "l_convex": is_l_convex(p),
                "polyomino": json.loads(polyomino_to_json(p)),
            }
        )
        return 0
    if cmd == "project":
        p = _read_polyomino(args.input)
        pp = projections(p)
        star = ferrer_project(p)
        ps = projections(star)
        _emit({"H": list(pp.h), "V": list(pp.v), "staircase": {"H": list(ps.h), "V": list(ps.v)}})
        return 0
    if cmd == "rooks":
        p = _read_polyomino(args.input)
        if args.k is not None:
            _emit({"k": args.k, "count": rook_count(p, args.k)})
        else:
            counts = []
            k = 0
            while True:
                c = rook_count(p, k)
                if c == 0 and k > 0:
                    break
                counts.append(c)
                k += 1
            _emit({"counts": counts, "rook_number": len(counts) - 1})
        return 0
    if cmd == "reg":
        p = _read_polyomino(args.input)
        _emit({"regularity": regularity(p)})
        return 0
    if cmd == "rectangles":
        p = _read_polyomino(args.input)
        _emit(
            {
                "rectangles": [
                    {"x": r.x, "y": r.y, "width": r.width, "height": r.height}
                    for r in maximal_rectangles(p)
                ]
            }
        )
        return 0
    if cmd == "derived":
        p = _read_polyomino(args.input)
        seq = derived_sequence(p)
        _emit({"length": len(seq), "members": [json.loads(polyomino_to_json(q)) for q in seq]})
        return 0
    if cmd == "gorenstein":
        p = _read_polyomino(args.input)
        report = gorenstein_numeric(p)
        _emit(
            {
                "gorenstein": is_gorenstein(p),
                "row_criterion": report.row_criterion,
                "column_criterion": report.column_criterion,
                "row_values": [list(x) for x in report.row_values],
                "column_values": [list(x) for x in report.column_values],
            }
        )
        return 0
    if cmd == "classify":
        p = _read_polyomino(args.input)
        _emit({"class": punctured_spectrum_class(p).value})
        return 0
    if cmd == "type":
        p = _read_polyomino(args.input)
        want_closed = args.closed or args.both or not args.oracle
        want_oracle = args.oracle or args.both or not args.closed
        doc = {}
        if want_closed:
            res = closed_cm_type(p)
            doc["closed"] = {
                "r": res.r,
                "cases": [{"case": c.label, "value": c.value} for c in res.cases],
                "total": res.total,
            }
        if want_oracle:
            q = join_irreducible_poset(ferrer_project(p))
            doc["oracle"] = cm_type_oracle(q)
        _emit(doc)
        return 0
    if cmd == "ideal":
        p = _read_polyomino(args.input)
        gens = inner_minors(p)
        sys.stdout.write(export(gens, args.format, template=args.template))
        return 0
    if cmd == "render":
        p = _read_polyomino(args.input)
        print(render(p, args.style))
        return 0
    if cmd == "enumerate":
        stream = (
            enumerate_l_convex(args.max_m, args.max_n)
            if args.family == "lconvex"
            else enumerate_ferrer(args.max_m, args.max_n)
        )
        for p in stream:
            print(polyomino_to_json(p))
        return 0
    if cmd == "verify":
        if args.list:
            for name in sorted(checkmod.REGISTRY):
                print(name)
            return 0
        names = None if args.checks is None else [s for s in args.checks.split(",") if s]
        lines = checkmod.run_checks(names, max_m=args.max_m, max_n=args.max_n)
        text = checkmod.report_to_jsonl(lines)
        if args.out:
            with open(args.out, "a", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        failures = sum(1 for line in lines if not line["pass"])
        print(f"checks: {len(lines)} run, {failures} failed", file=sys.stderr)
        return VERIFY_EXIT if failures else 0
    raise AssertionError(f"unhandled command {cmd}")


if __name__ == "__main__":
    sys.exit(main())
