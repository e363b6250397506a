"""Command line front end.

Verdict subcommands exit 0 on a true verdict and 1 on a false one;
anything malformed exits 2 with a diagnostic on stderr.  Computation
subcommands print text by default and JSON with --json.
"""

import argparse
import json
import sys

from .edge_ideals import (binomial_edge_ideal, default_ring, edge_binomial,
                          edge_binomials, colon_bridge_formula,
                          colon_path_formula, sequence_for_ordering)
from .errors import BeiError
from .graphs import (Graph, cycle_graph, cycle_with_pendants, graph_from_json,
                     graph_to_json, nonisomorphic_trees, path_graph,
                     star_graph, tree_edge_ordering, unicyclic_edge_ordering)
from .ideal_ops import colon_by_poly, saturate_by_poly
from .rees import (edge_fiber_labels, rees_analysis, rees_ideal, relation_type,
                   sym_ideal, tree_rees_generators)
from .ring import PolyRing, PrimeField, QQ
from .repro import report_to_json_text, report_to_text, run_suite
from .sequences import (eq23_containment_check, is_d_sequence, is_p_sequence,
                        monomial_p_criterion, permutation_scan)


def _field(args):
    if getattr(args, "field", "q") == "p32003":
        return PrimeField(32003)
    return QQ


def _load_graph(args):
    path = args.graph
    if path is None:
        raise SystemExit2("a graph is required; pass --graph FILE")
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return graph_from_json(text)


class SystemExit2(Exception):
    """Raised for usage problems the argparse layer cannot see."""


def _ordering(graph, args):
    kind = getattr(args, "order", None) or "auto"
    if kind == "given":
        return None
    if kind == "tree":
        return tree_edge_ordering(graph, root=getattr(args, "root", None))
    if kind == "unicyclic":
        return unicyclic_edge_ordering(graph)
    # auto: pick whichever class fits
    from .graphs import analyze
    info = analyze(graph)
    if info.is_tree:
        return tree_edge_ordering(graph, root=getattr(args, "root", None))
    if info.is_unicyclic:
        return unicyclic_edge_ordering(graph)
    raise SystemExit2("graph is neither a tree nor unicyclic; "
                      "use --order given")


def _sequence(args):
    """Sequence of polynomials from --graph (ordered) or from --sequence."""
    if getattr(args, "sequence", None):
        if not getattr(args, "vars", None):
            raise SystemExit2("--sequence needs --vars")
        ring = PolyRing(tuple(args.vars.split(",")), field=_field(args))
        return [ring.parse(s) for s in args.sequence.split(",")], None
    graph = _load_graph(args)
    ordering = _ordering(graph, args)
    if ordering is None:
        edges = graph.edges
    else:
        edges = ordering.edges
    z = sequence_for_ordering(edges, n=graph.n, field=_field(args))
    return z, ordering


def _print_polys(polys, args, key="generators"):
    if args.json:
        print(json.dumps({key: [str(p) for p in polys]}, indent=2))
    else:
        for p in polys:
            print(p)


def cmd_ideal(args):
    graph = _load_graph(args)
    fs = edge_binomials(graph, field=_field(args))
    _print_polys(fs, args)
    return 0


def cmd_order(args):
    graph = _load_graph(args)
    ordering = _ordering(graph, args)
    if ordering is None:
        raise SystemExit2("--order given means no ordering to print")
    if args.json:
        print(json.dumps({"kind": ordering.kind, "root": ordering.root,
                          "edges": [list(e) for e in ordering.edges]},
                         indent=2))
    else:
        print(f"kind {ordering.kind}, root {ordering.root}")
        print(" ".join(f"{{{i},{j}}}" for i, j in ordering.edges))
    return 0


def cmd_colon(args):
    graph = _load_graph(args)
    try:
        i, j = (int(v) for v in args.edge.split(","))
    except ValueError:
        raise SystemExit2("--edge wants two comma separated vertices")
    ring = default_ring(graph.n, field=_field(args))
    f = edge_binomial(ring, i, j)
    ideal = colon_by_poly(binomial_edge_ideal(graph, ring=ring), f)
    out = {"colon": [str(g) for g in ideal.gens]}
    if args.formula and not graph.has_edge(*sorted((i, j))):
        closed = colon_path_formula(graph, (i, j), ring=ring)
        out["closed_form"] = [str(g) for g in closed.gens]
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        for g in ideal.gens:
            print(g)
        if "closed_form" in out:
            print("closed form:")
            for g in out["closed_form"]:
                print(g)
    return 0


def _verdict(holds, payload, args):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(payload.get("summary", holds))
        witness = payload.get("witness")
        if witness:
            print(f"witness: {witness}")
    return 0 if holds else 1


def cmd_pseq(args):
    z, _ = _sequence(args)
    report = is_p_sequence(z)
    payload = report.to_json()
    payload["summary"] = ("p-sequence" if report.holds
                          else "not a p-sequence")
    return _verdict(report.holds, payload, args)


def cmd_dseq(args):
    z, _ = _sequence(args)
    report = is_d_sequence(z)
    payload = report.to_json()
    payload["summary"] = ("d-sequence" if report.holds
                          else "not a d-sequence")
    return _verdict(report.holds, payload, args)


def cmd_permscan(args):
    z, _ = _sequence(args)
    report = permutation_scan(z, property=args.property, sample=args.sample,
                              seed=args.seed)
    payload = report.to_json()
    payload["summary"] = (f"{report.true_count}/{report.scanned} orderings "
                          f"satisfy the {args.property}-sequence conditions")
    return _verdict(report.any_true, payload, args)


def cmd_monocrit(args):
    z, _ = _sequence(args)
    report = monomial_p_criterion(z)
    payload = report.to_json()
    payload["summary"] = ("criterion holds" if report.holds
                          else "criterion fails")
    return _verdict(report.holds, payload, args)


def cmd_eq23(args):
    z, _ = _sequence(args)
    report = eq23_containment_check(z, args.index, args.power)
    payload = report.to_json()
    payload["summary"] = ("containment holds" if report.holds
                          else "containment fails")
    return _verdict(report.holds, payload, args)


def cmd_rees(args):
    graph = _load_graph(args)
    fs = edge_binomials(graph, field=_field(args))
    labels = edge_fiber_labels(graph.edges)
    kernel = rees_ideal(fs, labels=labels)
    if args.json:
        print(json.dumps({
            "labels": list(labels),
            "generators": [str(g) for g in kernel.gens],
            "bidegrees": [list(g.bidegree()) for g in kernel.gens],
        }, indent=2))
    else:
        for g in kernel.gens:
            print(g)
    return 0


def cmd_sym(args):
    graph = _load_graph(args)
    fs = edge_binomials(graph, field=_field(args))
    labels = edge_fiber_labels(graph.edges)
    ideal = sym_ideal(fs, labels=labels)
    _print_polys(ideal.gens, args)
    return 0


def cmd_lintype(args):
    graph = _load_graph(args)
    fs = edge_binomials(graph, field=_field(args))
    labels = edge_fiber_labels(graph.edges)
    result = rees_analysis(fs, labels=labels, cap=args.cap)
    payload = result.to_json()
    payload["summary"] = ("linear type" if result.linear_type
                          else f"not linear type; relation type "
                               f"{result.relation_type}")
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(payload["summary"])
        if result.certificate is not None:
            print(f"certificate bidegree {tuple(result.certificate['bidegree'])}")
    return 0 if result.linear_type else 1


def cmd_reltype(args):
    graph = _load_graph(args)
    fs = edge_binomials(graph, field=_field(args))
    labels = edge_fiber_labels(graph.edges)
    value = relation_type(fs, cap=args.cap, labels=labels)
    if args.json:
        print(json.dumps({"relation_type": value}, indent=2))
    else:
        print(value)
    return 0


def cmd_gen(args):
    family = args.family
    if family == "path":
        graphs = [path_graph(args.size)]
    elif family == "cycle":
        graphs = [cycle_graph(args.size)]
    elif family == "star":
        graphs = [star_graph(args.size)]
    elif family == "cycle-pendants":
        if args.pendants is None:
            raise SystemExit2("cycle-pendants needs SIZE and --pendants K")
        graphs = [cycle_with_pendants(args.size, args.pendants)]
    elif family == "trees":
        graphs = list(nonisomorphic_trees(args.size))
    else:
        raise SystemExit2(f"unknown family {family!r}")
    for g in graphs:
        print(json.dumps(graph_to_json(g)))
    return 0


def cmd_repro(args):
    report = run_suite(scope=args.scope, seed=args.seed)
    if args.json:
        print(report_to_json_text(report))
    else:
        print(report_to_text(report))
    return 0 if report.all_passed else 1


def _add_graph_flags(sub, order=True):
    sub.add_argument("--graph", help="graph JSON file, or - for stdin")
    if order:
        sub.add_argument("--order", choices=["auto", "tree", "unicyclic",
                                             "given"], default="auto",
                         help="edge ordering to use (default: auto)")
        sub.add_argument("--root", type=int, default=None,
                         help="pendant root for the tree ordering")


def _add_sequence_flags(sub):
    _add_graph_flags(sub)
    sub.add_argument("--sequence", help="comma separated polynomials "
                                        "(instead of a graph)")
    sub.add_argument("--vars", help="comma separated variable names "
                                    "for --sequence")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bei",
        description="Binomial edge ideals: sequence conditions, colon "
                    "formulas, Rees and symmetric algebra presentations.")
    parser.add_argument("--json", action="store_true",
                        help="machine readable output")
    parser.add_argument("--field", choices=["q", "p32003"], default="q",
                        help="coefficient field (default: rationals)")
    # the same flags are accepted after the subcommand; SUPPRESS keeps a
    # missing occurrence from clobbering the top-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="machine readable output")
    common.add_argument("--field", choices=["q", "p32003"],
                        default=argparse.SUPPRESS,
                        help="coefficient field (default: rationals)")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ideal", help="print the edge binomials",
                       parents=[common])
    _add_graph_flags(s, order=False)
    s.set_defaults(fn=cmd_ideal)

    s = sub.add_parser("order", help="print the edge ordering", parents=[common])
    _add_graph_flags(s)
    s.set_defaults(fn=cmd_order)

    s = sub.add_parser("colon", help="colon of the edge ideal by one "
                                     "edge binomial", parents=[common])
    _add_graph_flags(s, order=False)
    s.add_argument("--edge", required=True, help="i,j")
    s.add_argument("--formula", action="store_true",
                   help="also print the closed form when e is a non-edge")
    s.set_defaults(fn=cmd_colon)

    s = sub.add_parser("pseq", help="decide the p-sequence conditions", parents=[common])
    _add_sequence_flags(s)
    s.set_defaults(fn=cmd_pseq)

    s = sub.add_parser("dseq", help="decide the d-sequence conditions", parents=[common])
    _add_sequence_flags(s)
    s.set_defaults(fn=cmd_dseq)

    s = sub.add_parser("permscan", help="scan orderings for a property", parents=[common])
    _add_sequence_flags(s)
    s.add_argument("--property", choices=["p", "d"], default="p")
    s.add_argument("--sample", type=int, default=None,
                   help="draw this many orderings instead of all")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_permscan)

    s = sub.add_parser("monocrit", help="gcd criterion for monomial "
                                        "sequences", parents=[common])
    _add_sequence_flags(s)
    s.set_defaults(fn=cmd_monocrit)

    s = sub.add_parser("eq23", help="prefix-power containment check", parents=[common])
    _add_sequence_flags(s)
    s.add_argument("--index", type=int, required=True,
                   help="1-based position of the distinguished element")
    s.add_argument("--power", type=int, required=True,
                   help="prefix power s")
    s.set_defaults(fn=cmd_eq23)

    s = sub.add_parser("rees", help="defining ideal of the Rees algebra", parents=[common])
    _add_graph_flags(s, order=False)
    s.set_defaults(fn=cmd_rees)

    s = sub.add_parser("sym", help="defining ideal of the symmetric algebra", parents=[common])
    _add_graph_flags(s, order=False)
    s.set_defaults(fn=cmd_sym)

    s = sub.add_parser("lintype", help="decide linear type", parents=[common])
    _add_graph_flags(s, order=False)
    s.add_argument("--cap", type=int, default=8,
                   help="relation-type search cap")
    s.set_defaults(fn=cmd_lintype)

    s = sub.add_parser("reltype", help="relation type of the edge ideal", parents=[common])
    _add_graph_flags(s, order=False)
    s.add_argument("--cap", type=int, default=8)
    s.set_defaults(fn=cmd_reltype)

    s = sub.add_parser("gen", help="emit graphs from the built-in families", parents=[common])
    s.add_argument("family", choices=["path", "cycle", "star",
                                      "cycle-pendants", "trees"])
    s.add_argument("size", type=int)
    s.add_argument("--pendants", type=int, default=None)
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("repro", help="run the reproduction suite", parents=[common])
    s.add_argument("--scope", choices=["fast", "full"], default="fast")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_repro)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BeiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
