"""``fatgraph`` command-line tool.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

import argparse
import json
import re
import sys

from . import constructions as C
from .core import EDGE_FIRST, VERTEX_FIRST
from .enumeration import METHODS, EnumFilter, class_key, classify_table, enumerate_graphs
from .errors import BadAnchor, FatGraphError, NotPair
from .io import dumps_graph, format_report, graph_to_dict, read_graph, run_report, to_dot
from .iso import are_isomorphic, canonical_code, find_isomorphism


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _walks_text(G, walks):
    return "".join("(" + ", ".join(G.name_seq(w)) + ")\n" for w in walks)


# -- subcommands --------------------------------------------------------------

def cmd_validate(args):
    G = read_graph(args.file)
    inv = G.surface_invariants()
    if args.json:
        _emit_json({"valid": True, "darts": G.n_darts, **inv.as_dict()})
    else:
        print(f"valid: {G.n_darts} darts, V={inv.V}, E1={inv.E1}, B={inv.B}")


def cmd_report(args):
    G = read_graph(args.file)
    if args.json:
        _emit_json(run_report(G))
    else:
        sys.stdout.write(format_report(G))


def cmd_boundaries(args):
    G = read_graph(args.file)
    walks = G.boundary_walks(args.convention)
    if args.json:
        _emit_json([list(G.name_seq(w)) for w in walks])
    else:
        sys.stdout.write(_walks_text(G, walks))


def cmd_curves(args):
    G = read_graph(args.file)
    dec = G.standard_curves()
    if args.json:
        _emit_json(
            [
                {"darts": list(G.name_seq(c)), "length": len(c), "simple": s}
                for c, s in zip(dec.curves, dec.simple)
            ]
        )
    else:
        for c, s in zip(dec.curves, dec.simple):
            tag = "simple" if s else "self-intersecting"
            print("(" + ", ".join(G.name_seq(c)) + f")  length {len(c)}, {tag}")


def cmd_canon(args):
    G = read_graph(args.file)
    code = canonical_code(G).hex()
    if args.json:
        _emit_json({"code": code})
    else:
        print(code)


def cmd_iso(args):
    G, H = read_graph(args.a), read_graph(args.b)
    same = are_isomorphic(G, H)
    if args.json:
        out = {"isomorphic": same}
        if same and G.is_connected():
            f = find_isomorphism(G, H)
            out["map"] = {G.names[d]: H.names[f[d]] for d in range(G.n_darts)}
        _emit_json(out)
    else:
        print("isomorphic" if same else "not isomorphic")
    return 0


def cmd_enumerate(args):
    flt = EnumFilter(
        vertex_count=args.vertices,
        require_connected=args.connected,
        curve_count=args.curves,
        boundary_count=args.boundaries,
        require_simple_curves=args.simple,
        curve_lengths=tuple(args.lengths) if args.lengths else None,
    )
    graphs = enumerate_graphs(flt, method=args.method, jobs=args.jobs)
    if args.json:
        _emit_json(
            {
                "count": len(graphs),
                "classes": [
                    {"code": class_key(G), "graph": graph_to_dict(G)} for G in graphs
                ],
            }
        )
    else:
        for G in graphs:
            inv = G.surface_invariants()
            dec = G.standard_curves()
            lengths = ",".join(map(str, sorted(dec.lengths, reverse=True)))
            print(f"{class_key(G)}  B={inv.B} curves={len(dec)} lengths={{{lengths}}}")
        print(f"{len(graphs)} classes")


def cmd_classify(args):
    table = classify_table(args.vertices, require_simple=args.simple, method=args.method, jobs=args.jobs)
    if args.json:
        _emit_json(table.as_dict())
    else:
        sys.stdout.write(table.to_text())


_BUILDERS = {
    "theta": lambda a: C.theta(),
    "theta-bar": lambda a: C.theta_bar(),
    "fig8": lambda a: C.f2_two_disc_pair(),
    "gamma": lambda a: C.gamma(),
    "g2": lambda a: C.g2_pair(_need(a.k, "--k")),
    "g3": lambda a: C.g3_pair(_need(a.k, "--k")),
    "pair": lambda a: C.filling_pair(_need(a.genus, "--genus"), _need(a.k, "--k")),
}


class _Usage(Exception):
    pass


def _need(value, flag):
    if value is None:
        raise _Usage(f"this family needs {flag}")
    return value


def cmd_construct(args):
    sys.stdout.write(dumps_graph(_BUILDERS[args.family](args)))


def _anchored(G, at):
    """Normal labeling anchored at a dart name, or at some dart of vertex ``vN``."""
    m = re.fullmatch(r"v(\d+)", at)
    if m is None:
        return C.normal_labeling(G, anchor=at)
    verts = G.vertices()
    j = int(m.group(1))
    if not 1 <= j <= len(verts):
        raise BadAnchor(f"no vertex {at}; the graph has {len(verts)}")
    last = None
    for d in verts[j - 1]:
        try:
            H = C.normal_labeling(G, anchor=d)
            C.check_anchor(H)
            return H
        except (BadAnchor, NotPair) as exc:
            last = exc
    raise last


def cmd_sum(args):
    G = _anchored(read_graph(args.file), args.at)
    sys.stdout.write(dumps_graph(C.connect_sum_gamma(G)))


def cmd_export(args):
    G = read_graph(args.file)
    if args.format == "dot":
        sys.stdout.write(to_dot(G, color_walks=not args.no_color))
    else:
        sys.stdout.write(dumps_graph(G))


# -- parser ----------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output and errors")

    enum_opts = argparse.ArgumentParser(add_help=False)
    enum_opts.add_argument("--vertices", "-v", type=_positive, required=True)
    enum_opts.add_argument(
        "--simple", action=argparse.BooleanOptionalAction, default=True,
        help="keep only classes whose curves are all simple (default: on)",
    )
    enum_opts.add_argument("--method", choices=METHODS, default="rooted")
    enum_opts.add_argument("--jobs", "-j", type=_positive, default=1)

    p = argparse.ArgumentParser(prog="fatgraph", description="Fat graphs and filling curve systems.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_, parents=(common,)):
        sp = sub.add_parser(name, parents=list(parents), help=help_)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a graph file").add_argument("file")
    add("report", cmd_report, "invariants, walks, curves and filling status").add_argument("file")
    sp = add("boundaries", cmd_boundaries, "boundary walks")
    sp.add_argument("file")
    sp.add_argument(
        "--convention", choices=(VERTEX_FIRST, EDGE_FIRST), default=VERTEX_FIRST,
        help="composition order of the face permutation",
    )
    add("curves", cmd_curves, "standard curves").add_argument("file")
    add("canon", cmd_canon, "canonical code (hex)").add_argument("file")
    sp = add("iso", cmd_iso, "test two graphs for isomorphism")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("enumerate", cmd_enumerate, "list 4-regular classes", parents=(common, enum_opts))
    sp.add_argument("--curves", type=int)
    sp.add_argument("--boundaries", type=int)
    sp.add_argument("--lengths", type=int, nargs="+", help="curve length multiset")
    sp.add_argument(
        "--connected", action=argparse.BooleanOptionalAction, default=True,
        help="keep only connected graphs (default: on)",
    )
    add("classify", cmd_classify, "table of classes by curves and boundaries", parents=(common, enum_opts))

    sp = add("construct", cmd_construct, "emit a named graph or family member")
    sp.add_argument("family", choices=sorted(_BUILDERS))
    sp.add_argument("--k", type=int)
    sp.add_argument("--genus", "-g", type=int)

    sp = add("sum", cmd_sum, "connect-sum with the genus-2 gadget")
    sp.add_argument("file")
    sp.add_argument("--at", required=True, help="anchor dart name, or vertex as vN")

    sp = add("export", cmd_export, "write as DOT or normalized JSON")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("dot", "json"), default="dot")
    sp.add_argument("--no-color", action="store_true", help="omit boundary-walk colors in DOT")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except FatGraphError as exc:
        if args.json:
            _emit_json(exc.to_dict())
        else:
            print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
