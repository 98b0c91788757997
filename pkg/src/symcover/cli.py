"""Command-line interface.

Subcommands mirror the library: queries (check-vd, cover-ideal,
symbolic-power, polarize, linear-quotients), theorem verification
(verify main|edge|glue|star), and the small-graph counterexample search.

Exit codes: 0 when every check passed, 1 when an assertion or decision
failed (a graph that is not vertex decomposable, an ideal without linear
quotients, a failing verification step), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .decomposability import is_vertex_decomposable, render_certificate
from .duplication import DuplicationTuple
from .graphs import GraphError, StarCompleteSpec, load_graph
from .ideals import (
    IdealError,
    has_linear_quotients,
    load_ideal,
    polarize,
    render_ideal_text,
    symbolic_power,
)
from .ideals import cover_ideal as cover_ideal_of
from .scenarios import (
    ScenarioReport,
    counterexample_search,
    verify_edge_theorem,
    verify_glue_star,
    verify_glue_theorem,
    verify_main_theorem,
)

PASS, FAIL, USAGE = 0, 1, 2


def _parse_names(text: str) -> list[str]:
    return [part for part in text.split(",") if part]


def _parse_counts(text: str | None) -> dict[str, int] | int:
    if not text:
        return 1
    out: dict[str, int] = {}
    for item in _parse_names(text):
        name, _, raw = item.partition("=")
        if not raw:
            raise GraphError(f"counts entry {item!r} must look like vertex=count")
        out[name] = int(raw)
    return out


def _parse_spec(text: str) -> StarCompleteSpec:
    name, _, sizes = text.partition(":")
    if not sizes:
        raise GraphError(f"attachment {text!r} must look like vertex:size,size")
    return StarCompleteSpec(name, tuple(int(s) for s in sizes.split(",")))


def _emit_report(report: ScenarioReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.to_text(), end="")


def _emit_reports(reports: list[ScenarioReport], fmt: str) -> None:
    reports = sorted(reports, key=lambda r: r.scenario)
    if fmt == "json":
        print(json.dumps([r.to_json_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for report in reports:
            _emit_report(report, fmt)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcover",
        description="cover ideals, symbolic powers, duplication, and vertex decomposability",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check-vd", help="decide vertex decomposability of a graph file")
    p.add_argument("graph")
    p.add_argument("--certificate", action="store_true", help="print the witness tree")
    add_format(p)

    p = sub.add_parser("cover-ideal", help="minimal generators of the cover ideal")
    p.add_argument("graph")
    add_format(p)

    p = sub.add_parser("symbolic-power", help="minimal generators of a symbolic power")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    add_format(p)

    p = sub.add_parser("polarize", help="polarize an ideal file")
    p.add_argument("ideal")
    add_format(p)

    p = sub.add_parser("linear-quotients", help="search for a linear-quotients order")
    p.add_argument("ideal")
    add_format(p)

    p = sub.add_parser("verify", help="run a theorem-shaped scenario")
    p.add_argument("theorem", choices=("main", "edge", "glue", "star"))
    p.add_argument("--graph", required=True)
    p.add_argument("--graph2", help="second factor (glue only)")
    p.add_argument("--edge", help="shared edge u,v (glue only)")
    p.add_argument("--S", default="", help="comma-separated vertex set")
    p.add_argument("--counts", help="whiskers per vertex, e.g. x1=2,x3=1")
    p.add_argument("--tuple", dest="tuple_", help="duplication tuple, e.g. 1,2,3,2")
    p.add_argument("--tuple2", help="duplication tuple of the second factor (glue only)")
    p.add_argument("--k", type=int, default=2, help="duplication bound (main/star)")
    p.add_argument("--spec", action="append", default=[],
                   help="star attachment vertex:size,size (repeatable)")
    add_format(p)

    p = sub.add_parser("search", help="stream edge cases over small graphs")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--mode", choices=("i", "ii"), required=True)
    add_format(p)

    return parser


def _run_check_vd(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    cert = is_vertex_decomposable(graph)
    verdict = cert is not None
    if args.format == "json":
        doc = {"vertex_decomposable": verdict}
        if verdict and args.certificate:
            doc["certificate"] = render_certificate(cert)
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"vertex decomposable: {'yes' if verdict else 'no'}")
        if verdict and args.certificate:
            print(render_certificate(cert))
    return PASS if verdict else FAIL


def _print_ideal(ideal, fmt: str) -> None:
    if fmt == "json":
        doc = {
            "variables": list(ideal.variables),
            "whole_ring": ideal.is_whole_ring,
            "generators": [g.render(ideal.variables) for g in ideal.generators],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(render_ideal_text(ideal), end="")


def _run_verify(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    names = _parse_names(args.S)
    counts = _parse_counts(args.counts)

    def tuple_for(raw: str | None, edge_count: int) -> DuplicationTuple:
        # a tuple can be spelled out or given as --k for the constant tuple
        if raw:
            return DuplicationTuple.parse(raw)
        return DuplicationTuple.constant(args.k, edge_count)

    if args.theorem == "main":
        report = verify_main_theorem(graph, names, counts, k_max=args.k)
    elif args.theorem == "edge":
        whiskered_edges = graph.edge_count + sum(
            counts.values() if isinstance(counts, dict) else [counts] * len(names)
        )
        report = verify_edge_theorem(graph, names, counts,
                                     tuple_for(args.tuple_, whiskered_edges))
    elif args.theorem == "star":
        specs = [_parse_spec(s) for s in args.spec]
        report = verify_glue_star(graph, names, specs, k_max=args.k)
    else:
        if not (args.graph2 and args.edge):
            raise GraphError("verify glue needs --graph2 and --edge")
        u, v = (args.edge.split(",") + ["", ""])[:2]
        if not u or not v:
            raise GraphError("--edge must look like u,v")
        h = load_graph(args.graph2)
        report = verify_glue_theorem(
            graph,
            h,
            (u, v),
            tuple_for(args.tuple_, graph.edge_count),
            tuple_for(args.tuple2, h.edge_count),
        )
    _emit_report(report, args.format)
    return PASS if report.overall_pass else FAIL


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check-vd":
            return _run_check_vd(args)
        if args.command == "cover-ideal":
            _print_ideal(cover_ideal_of(load_graph(args.graph)), args.format)
            return PASS
        if args.command == "symbolic-power":
            _print_ideal(symbolic_power(load_graph(args.graph), args.k), args.format)
            return PASS
        if args.command == "polarize":
            _print_ideal(polarize(load_ideal(args.ideal)), args.format)
            return PASS
        if args.command == "linear-quotients":
            ideal = load_ideal(args.ideal)
            order = has_linear_quotients(ideal)
            if args.format == "json":
                doc = {
                    "has_linear_quotients": order is not None,
                    "order": [g.render(ideal.variables) for g in order] if order else None,
                }
                print(json.dumps(doc, indent=2, sort_keys=True))
            else:
                if order is None:
                    print("linear quotients: no")
                else:
                    print("linear quotients: yes")
                    for g in order:
                        print(g.render(ideal.variables))
            return PASS if order is not None else FAIL
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "search":
            reports = list(counterexample_search(args.max_vertices, args.max_k, args.mode))
            _emit_reports(reports, args.format)
            return PASS
        raise AssertionError(f"unhandled command {args.command}")
    except (GraphError, IdealError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
