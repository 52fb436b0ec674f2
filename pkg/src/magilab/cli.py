"""Command-line front end: generate, construct, transform, verify, search, suites.

Machine output is JSON on stdout; ``--format dot`` renders graphs (with
labels when available) for graphviz; suites default to a table.  Exit
status: 0 on success/pass, 1 on verification failure, failed theorem
report, or budget refusal, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import analysis, constructions, search
from .graphs import (CaterpillarSpec, FamilyHandle, Graph, GraphError, graph_from_dict,
                     graph_of, build_caterpillar, build_complete_bipartite, build_cycle,
                     build_double_star, build_lobster, build_path, build_star)
from .labelings import LabelingError, TotalLabeling, classify, is_graceful

_BUDGET_ENV = "MAGILAB_BUDGET"


class CliError(Exception):
    """Bad input surfaced with a message and exit code 2."""


def _env_budget(explicit: Optional[int]) -> Optional[int]:
    if explicit is not None:
        return explicit
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"{_BUDGET_ENV} must be an integer, got {raw!r}")


def _parse_spine(text: str) -> CaterpillarSpec:
    try:
        counts = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CliError(f"malformed spine spec {text!r}; expected comma-separated integers")
    if not counts:
        raise CliError("spine spec must name at least one spine vertex")
    return CaterpillarSpec(len(counts), counts)


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read JSON from {path}: {exc}")


def _write(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def to_dot(graph: Graph, labeling: Optional[TotalLabeling] = None,
           name_map: Optional[dict] = None) -> str:
    """Graphviz rendering with labeling values as node/edge labels."""
    names = {}
    if name_map:
        names = {v: name for name, v in name_map.items()}
    lines = ["graph G {"]
    for v in range(graph.vertex_count):
        if labeling is not None:
            label = str(labeling.vertex_labels[v])
        else:
            label = names.get(v, str(v))
        lines.append(f'  {v} [label="{label}"];')
    for i, (u, v) in enumerate(graph.edges):
        if labeling is not None:
            lines.append(f'  {u} -- {v} [label="{labeling.edge_labels[i]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def _bundle(handle_or_graph, labeling: TotalLabeling) -> dict:
    graph = graph_of(handle_or_graph)
    record = (handle_or_graph.to_dict() if isinstance(handle_or_graph, FamilyHandle)
              else graph.to_dict())
    return {
        "graph": record,
        "labeling": labeling.to_dict(),
        "classification": classify(graph, labeling).to_dict(),
    }


def _load_bundle(data: dict) -> tuple[Graph, TotalLabeling]:
    if "graph" not in data or "labeling" not in data:
        raise CliError("expected a bundle object with 'graph' and 'labeling' keys")
    graph = graph_of(graph_from_dict(data["graph"]))
    labeling = TotalLabeling.from_dict(data["labeling"])
    return graph, labeling


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    if args.family == "caterpillar":
        handle = build_caterpillar(_parse_spine(args.spine))
    elif args.family == "double-star":
        handle = build_double_star(args.m, args.n)
    elif args.family == "lobster":
        handle = build_lobster(args.p)
    elif args.family == "cycle":
        handle = build_cycle(args.length)
    elif args.family == "path":
        handle = build_path(args.n)
    elif args.family == "star":
        handle = build_star(args.p)
    else:  # kmn
        handle = build_complete_bipartite(args.m, args.n)
    if args.format == "dot":
        _write(to_dot(handle.graph, name_map=handle.name_map), args.out)
    else:
        _write(json.dumps(handle.to_dict(), indent=2), args.out)
    return 0


def _cmd_construct(args) -> int:
    if args.construction == "caterpillar-beta":
        spec = _parse_spine(args.spine)
        handle = build_caterpillar(spec)
        labeling = constructions.caterpillar_beta_labeling(spec)
    elif args.construction == "caterpillar-super":
        spec = _parse_spine(args.spine)
        handle = build_caterpillar(spec)
        labeling = constructions.caterpillar_super_labeling(spec)
    else:  # double-star
        handle = build_double_star(args.m, args.n)
        labeling = constructions.double_star_consecutive(args.m, args.n, args.variant)
    if args.format == "dot":
        _write(to_dot(handle.graph, labeling), args.out)
    else:
        _write(json.dumps(_bundle(handle, labeling), indent=2), args.out)
    return 0


def _cmd_transform(args) -> int:
    graph, labeling = _load_bundle(_read_json(args.bundle))
    try:
        if args.transform == "dual":
            out_lab = constructions.dual(graph, labeling)
        elif args.transform == "lambda-star":
            out_lab = constructions.lambda_star(graph, labeling)
        elif args.transform == "super":
            out_lab = constructions.to_super_edge_magic(graph, labeling)
        else:  # graceful
            graceful = constructions.to_graceful(graph, labeling)
            payload = {
                "graph": graph.to_dict(),
                "graceful": graceful.to_dict(),
                "is_graceful": is_graceful(graph, graceful),
            }
            _write(json.dumps(payload, indent=2), args.out)
            return 0
    except constructions.ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "dot":
        _write(to_dot(graph, out_lab), args.out)
    else:
        _write(json.dumps(_bundle(graph, out_lab), indent=2), args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.labeling is None:
        graph, labeling = _load_bundle(_read_json(args.graph))
    else:
        graph = graph_of(graph_from_dict(_read_json(args.graph)))
        labeling = TotalLabeling.from_dict(_read_json(args.labeling))
    try:
        result = classify(graph, labeling)
    except LabelingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(json.dumps(result.to_dict(), indent=2), args.out)
    return 0 if result.magic_constant is not None else 1


def _cmd_search(args) -> int:
    graph = graph_of(graph_from_dict(_read_json(args.graph)))
    budget = _env_budget(args.budget)
    pruning = not args.no_prune
    try:
        if args.b == "all":
            feasible = search.feasible_b_set(graph, budget=budget,
                                             use_theorem_pruning=pruning)
            _write(json.dumps({"feasible_b": sorted(feasible), "exhausted": True}),
                   args.out)
            return 0
        if args.b is None:
            query = search.SearchQuery(graph, magic_constant=args.k, limit=args.limit,
                                       canonical_only=args.canonical,
                                       use_theorem_pruning=pruning)
            report = search.find_edge_magic(query, budget=budget)
        else:
            try:
                b = int(args.b)
            except ValueError:
                raise CliError(f"--b expects an integer or 'all', got {args.b!r}")
            query = search.SearchQuery(graph, b=b, magic_constant=args.k,
                                       limit=args.limit, canonical_only=args.canonical,
                                       use_theorem_pruning=pruning)
            report = search.find_consecutive(query)
    except search.BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return 1
    _write(json.dumps(report.to_dict()), args.out)
    return 0


def _cmd_analyze(args) -> int:
    witness = analysis.constant_form_check(args.m, args.n, args.k)
    _write(json.dumps(witness.to_dict()), args.out)
    return 0 if witness.t is not None else 1


def _cmd_suite(args) -> int:
    budget = _env_budget(args.budget)
    if args.suite == "closing":
        reports = analysis.closing_claims_suite(budget=budget)
    elif args.suite == "caterpillar":
        reports = analysis.caterpillar_suite(max_labels=args.max_labels, budget=budget)
    elif args.suite == "lobster":
        reports = analysis.lobster_suite(budget=budget)
    else:  # double-star
        reports = analysis.double_star_suite(budget=budget)
    if args.format == "json":
        _write(json.dumps([r.to_dict() for r in reports], indent=2), args.out)
    else:
        _write(analysis.format_report_table(reports), args.out)
    failed = [r for r in reports if r.verdict == analysis.FAIL]
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magilab",
        description="Consecutive edge-magic labelings: generate, construct, "
                    "transform, verify, search, and run theorem suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_choices=("json", "dot")):
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        p.add_argument("-o", "--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("gen", help="generate a named family graph")
    gensub = p.add_subparsers(dest="family", required=True)
    g = gensub.add_parser("caterpillar")
    g.add_argument("--spine", required=True, help="comma-separated leaf counts, e.g. 2,1,2")
    add_common(g)
    g = gensub.add_parser("double-star")
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    add_common(g)
    g = gensub.add_parser("lobster")
    g.add_argument("-p", type=int, required=True, help="number of legs")
    add_common(g)
    g = gensub.add_parser("cycle")
    g.add_argument("-l", "--length", type=int, required=True)
    add_common(g)
    g = gensub.add_parser("path")
    g.add_argument("-n", type=int, required=True, help="number of vertices")
    add_common(g)
    g = gensub.add_parser("star")
    g.add_argument("-p", type=int, required=True, help="number of leaves")
    add_common(g)
    g = gensub.add_parser("kmn")
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    add_common(g)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("construct", help="build an explicit labeling")
    consub = p.add_subparsers(dest="construction", required=True)
    c = consub.add_parser("caterpillar-beta")
    c.add_argument("--spine", required=True)
    add_common(c)
    c = consub.add_parser("caterpillar-super")
    c.add_argument("--spine", required=True)
    add_common(c)
    c = consub.add_parser("double-star")
    c.add_argument("m", type=int)
    c.add_argument("n", type=int)
    c.add_argument("--variant", type=int, choices=(1, 2), default=1)
    add_common(c)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("transform", help="apply a labeling transform to a bundle")
    p.add_argument("transform", choices=("dual", "lambda-star", "graceful", "super"))
    p.add_argument("bundle", nargs="?", default="-",
                   help="bundle file with graph+labeling ('-' for stdin)")
    add_common(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("verify", help="classify a labeling against a graph")
    p.add_argument("graph", help="graph JSON, or a bundle / '-' for bundle on stdin")
    p.add_argument("labeling", nargs="?", default=None, help="labeling JSON file")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="exhaustive labeling search")
    p.add_argument("--graph", required=True, help="graph JSON file ('-' for stdin)")
    p.add_argument("--b", default=None,
                   help="block offset, or 'all' for the feasible set; omit for edge-magic")
    p.add_argument("--k", type=int, default=None, help="restrict to one magic constant")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--no-prune", action="store_true",
                   help="pure oracle mode: disable the neighbor-block speedup")
    p.add_argument("--canonical", action="store_true",
                   help="break label symmetry between twin vertices")
    p.add_argument("--budget", type=int, default=None,
                   help=f"label-count budget (default {search.DEFAULT_BUDGET}, "
                        f"env {_BUDGET_ENV})")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("analyze", help="constant-form analysis")
    ansub = p.add_subparsers(dest="analysis", required=True)
    a = ansub.add_parser("constant-form")
    a.add_argument("m", type=int)
    a.add_argument("n", type=int)
    a.add_argument("k", type=int)
    a.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("suite", help="run a theorem verification suite")
    p.add_argument("suite", choices=("closing", "caterpillar", "lobster", "double-star"))
    p.add_argument("--max-labels", type=int, default=19,
                   help="caterpillar suite size cap on |V|+|E|")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, LabelingError, search.SearchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
