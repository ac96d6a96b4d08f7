"""Graph files, reports and DOT export.

Graph files are JSON documents::

    {
      "edges": ["e1", "e2", "e3"],
      "vertices": [
        ["e1+", "e3+", "e2+"],
        ["e1-", "e2-", "e3-"]
      ]
    }

Dart ``X+`` runs along edge ``X`` and ``X-`` against it; each vertex lists
its darts counterclockwise.  The writer rotates each cycle to start at its
lexicographically least dart and sorts vertices by that dart, so
``dumps_graph(loads_graph(dumps_graph(G)))`` is byte-identical.
"""

import json

from .core import EDGE_FIRST, VERTEX_FIRST, FatGraph, build, signed_partner
from .errors import ParseError, UnpairedDart

DOT_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
    "#bcbd22",
    "#7f7f7f",
)


def _has_signed_names(G):
    return all(signed_partner(x) == G.names[G.sigma1[d]] for d, x in enumerate(G.names))


def with_edge_names(G, prefix="a"):
    """``G`` itself if its names follow the ``X+``/``X-`` scheme, else renamed."""
    if _has_signed_names(G):
        return G
    names = [None] * G.n_darts
    j = 0
    for d in range(G.n_darts):
        if names[d] is None:
            j += 1
            names[d] = f"{prefix}{j}+"
            names[G.sigma1[d]] = f"{prefix}{j}-"
    return FatGraph(G.sigma0, G.sigma1, names, check=False)


def graph_to_dict(G):
    G = with_edge_names(G)
    edges = sorted({x[:-1] for x in G.names})
    vertices = []
    for cyc in G.vertices():
        names = G.name_seq(cyc)
        k = names.index(min(names))
        vertices.append(list(names[k:] + names[:k]))
    vertices.sort(key=lambda c: c[0])
    return {"edges": edges, "vertices": vertices}


def dumps_graph(G):
    data = graph_to_dict(G)
    lines = ["{", '  "edges": ' + json.dumps(data["edges"]) + ",", '  "vertices": [']
    rows = [json.dumps(c) for c in data["vertices"]]
    lines += ["    " + r + ("," if i < len(rows) - 1 else "") for i, r in enumerate(rows)]
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def graph_from_dict(data):
    if not isinstance(data, dict):
        raise ParseError("graph file must contain a JSON object")
    edges = data.get("edges")
    vertices = data.get("vertices")
    if not isinstance(edges, list) or not all(isinstance(e, str) for e in edges):
        raise ParseError('"edges" must be a list of strings')
    if not isinstance(vertices, list) or not all(
        isinstance(v, list) and all(isinstance(x, str) for x in v) for v in vertices
    ):
        raise ParseError('"vertices" must be a list of lists of dart names')
    edge_set = set(edges)
    for cyc in vertices:
        for x in cyc:
            if signed_partner(x) is None:
                raise ParseError(f"dart {x!r} must end in '+' or '-'", x)
            if x[:-1] not in edge_set:
                raise UnpairedDart(f"dart {x!r} belongs to no listed edge", x)
    G = build(vertices)
    present = {x[:-1] for x in G.names}
    missing = sorted(edge_set - present)
    if missing:
        raise UnpairedDart(f"edge {missing[0]!r} has no darts at any vertex", missing[0])
    return G


def loads_graph(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return graph_from_dict(data)


def read_graph(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads_graph(text)


def write_graph(G, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(G))


# -- reports ------------------------------------------------------------------

def run_report(G):
    """Invariants, walks, curves and filling status as a JSON-ready dict."""
    inv = G.surface_invariants()
    filling = G.classify_filling()
    curves = None
    if G.is_decorated():
        dec = G.standard_curves()
        curves = [
            {"darts": list(G.name_seq(c)), "length": len(c), "simple": s}
            for c, s in zip(dec.curves, dec.simple)
        ]
    return {
        "invariants": inv.as_dict(),
        "walks": [list(G.name_seq(w)) for w in G.boundary_walks()],
        "curves": curves,
        "filling": filling.as_dict(),
    }


def format_report(G):
    inv = G.surface_invariants()
    filling = G.classify_filling()
    genus = "n/a" if inv.genus is None else inv.genus
    lines = [
        f"surface: B={inv.B}, genus={genus}, chi={inv.chi} (V={inv.V}, E1={inv.E1}), "
        + ("connected" if inv.connected else "disconnected"),
        "degrees: " + " ".join(map(str, G.degrees())),
        f"boundary walks ({inv.B}):",
    ]
    lines += ["  (" + ", ".join(G.name_seq(w)) + ")" for w in G.boundary_walks()]
    if G.is_decorated():
        dec = G.standard_curves()
        lines.append(f"standard curves ({len(dec)}):")
        for c, s in zip(dec.curves, dec.simple):
            tag = "simple" if s else "self-intersecting"
            lines.append("  (" + ", ".join(G.name_seq(c)) + f")  length {len(c)}, {tag}")
    lines.append(filling.summary())
    if filling.bigon_count:
        lines.append(f"bigons: {filling.bigon_count}")
    return "\n".join(lines) + "\n"


# -- DOT --------------------------------------------------------------------------

def to_dot(G, color_walks=True, convention=VERTEX_FIRST):
    """Graphviz source: one node per vertex, one edge per dart pair.

    ``taillabel``/``headlabel`` give each end's position (0-based) in its
    vertex's counterclockwise order.  With ``color_walks`` each side of an
    edge is colored by the boundary walk it bounds.
    """
    G = with_edge_names(G)
    verts = G.vertices()
    pos = {}
    for j, cyc in enumerate(verts):
        for p, d in enumerate(cyc):
            pos[d] = (j, p)
    walk_of = {}
    for i, w in enumerate(G.boundary_walks(convention)):
        for d in w:
            walk_of[d] = i
    lines = ["graph fatgraph {", "  node [shape=circle];"]
    for j, cyc in enumerate(verts):
        lines.append(f'  v{j + 1} [label="v{j + 1}\\ndeg {len(cyc)}"];')
    for d in range(G.n_darts):
        name = G.names[d]
        if not name.endswith("+"):
            continue
        r = G.sigma1[d]
        (tv, tp), (hv, hp) = pos[d], pos[r]
        attrs = [f'label="{name[:-1]}"', f'taillabel="{tp}"', f'headlabel="{hp}"']
        if color_walks:
            a = DOT_PALETTE[walk_of[d] % len(DOT_PALETTE)]
            b = DOT_PALETTE[walk_of[r] % len(DOT_PALETTE)]
            attrs.append(f'color="{a}:{b}"')
            attrs.append(f'walks="{walk_of[d]},{walk_of[r]}"')
        lines.append(f"  v{tv + 1} -- v{hv + 1} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "EDGE_FIRST",
    "dumps_graph",
    "loads_graph",
    "read_graph",
    "write_graph",
    "graph_to_dict",
    "graph_from_dict",
    "run_report",
    "format_report",
    "to_dot",
    "with_edge_names",
]
