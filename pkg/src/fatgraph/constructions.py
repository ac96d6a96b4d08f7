"""Explicit fat graphs and the filling-pair families.

Family graphs use the normal labeling: the two curves are the edge cycles
``e1 -> e2 -> ... -> em`` and ``f1 -> ... -> fm`` and the distinguished vertex
reads ``(e1+, f1+, em-, fm-)`` counterclockwise.  Boundary walks quoted for
these families (and for the rewrite rules of :func:`predict_boundaries`)
follow the ``EDGE_FIRST`` face convention.
"""

import re

from .core import EDGE_FIRST, FatGraph, build
from .errors import (
    BadAnchor,
    EvenGenusKOne,
    Excluded21,
    FatGraphError,
    KTooSmall,
    NotPair,
    RuleNotApplicable,
)


def _cycles(spec):
    """Expand compact vertex specs like ``"e1 f1 E4 F4"`` (capital = reversed)."""
    out = []
    for vertex in spec:
        cyc = []
        for tok in vertex:
            if tok[0].isupper():
                cyc.append(tok.lower() + "-")
            else:
                cyc.append(tok + "+")
        out.append(cyc)
    return out


def _v(*tokens):
    return tokens


def theta():
    """Two trivalent vertices joined by three edges; three boundary walks."""
    return build([["e1+", "e3+", "e2+"], ["e1-", "e2-", "e3-"]])


def theta_bar():
    """Same underlying graph as :func:`theta` with one rotation changed; one walk."""
    return build([["e1+", "e2+", "e3+"], ["e1-", "e2-", "e3-"]])


def f2_two_disc_pair():
    """Genus-2 filling pair whose complement is two discs (4 vertices)."""
    return build(
        _cycles(
            [
                _v("e1", "f1", "E4", "F4"),
                _v("e2", "f2", "E1", "F1"),
                _v("e3", "F3", "E2", "f4"),
                _v("e4", "F2", "E3", "f3"),
            ]
        )
    )


def g2_pair(k):
    """Genus-2 filling pair with ``k >= 2`` complementary discs, ``k + 2`` vertices."""
    if k < 2:
        raise KTooSmall(f"no filling pair of the genus-2 surface has k={k} < 2 discs")
    e = lambda i: f"e{i}"  # noqa: E731
    E = lambda i: f"E{i}"  # noqa: E731
    f = lambda i: f"f{i}"  # noqa: E731
    F = lambda i: f"F{i}"  # noqa: E731
    if k % 2 == 0:
        m = k // 2 + 1
        verts = [(e(1), f(1), E(2 * m), F(2 * m))]
        verts += [(e(i), f(i), E(i - 1), F(i - 1)) for i in range(2, m + 1)]
        verts += [
            (e(i), F(3 * m - i), E(i - 1), f(3 * m - i + 1)) for i in range(m + 1, 2 * m + 1)
        ]
    else:
        n = (k - 1) // 2
        N = 2 * n + 3
        verts = [(e(1), f(1), E(N), F(N))]
        verts += [(e(i), F(N - i), E(i - 1), f(N + 1 - i)) for i in range(2, N)]
        verts += [(e(N), f(N), E(N - 1), F(N - 1))]
    return build(_cycles(verts))


def g3_pair(k):
    """Genus-3 filling pair with ``k >= 1`` complementary discs, ``k + 4`` vertices."""
    if k < 1:
        raise KTooSmall(f"k must be at least 1, got {k}")
    e = lambda i: f"e{i}"  # noqa: E731
    E = lambda i: f"E{i}"  # noqa: E731
    f = lambda i: f"f{i}"  # noqa: E731
    F = lambda i: f"F{i}"  # noqa: E731
    if k % 2 == 1:
        m = (k + 1) // 2
        N = 2 * m + 3
        verts = [(e(1), f(1), E(N), F(N))]
        verts += [(e(i), F(i), E(i - 1), f(i + 1)) for i in range(2, 2 * m + 2)]
        verts += [(e(2 * m + 2), F(1), E(2 * m + 1), f(2))]
        verts += [(e(N), f(N), E(N - 1), F(N - 1))]
    else:
        m = k // 2
        N = 2 * m + 4
        verts = [(e(1), f(1), E(N), F(N))]
        verts += [(e(i), F(i), E(i - 1), f(i + 1)) for i in range(2, m + 3)]
        verts += [(e(m + 3), F(1), E(m + 2), f(2))]
        verts += [(e(i), f(i), E(i - 1), F(i - 1)) for i in range(m + 4, N + 1)]
    return build(_cycles(verts))


def gamma():
    """The six-vertex genus-2 graph glued in by :func:`connect_sum_gamma`.

    Its curves are the ``x`` and ``y`` edge cycles; vertex ``u1`` is the
    first cycle.
    """
    return build(
        _cycles(
            [
                _v("y1", "X6", "Y6", "x1"),
                _v("y2", "x3", "Y1", "X2"),
                _v("y3", "x2", "Y2", "X1"),
                _v("y4", "X3", "Y3", "x4"),
                _v("y5", "x6", "Y4", "X5"),
                _v("y6", "x5", "Y5", "X4"),
            ]
        )
    )


# -- normal labeling ------------------------------------------------------

_NORMAL = re.compile(r"^([ef])(\d+)([+-])$")


def _normal_index(G):
    """``m`` if ``G``'s darts are exactly e1..em, f1..fm (signed), else ``None``."""
    seen = {"e": set(), "f": set()}
    for name in G.names:
        mt = _NORMAL.match(name)
        if not mt:
            return None
        seen[mt.group(1)].add(int(mt.group(2)))
    m = len(seen["e"])
    expected = set(range(1, m + 1))
    if seen["e"] != expected or seen["f"] != expected or G.n_darts != 4 * m:
        return None
    return m


def normal_labeling(G, anchor=None):
    """Rename the darts of a filling-pair graph into the normal labeling.

    ``anchor`` (a dart name or index, default ``"e1+"`` when present, else
    dart 0) becomes ``e1+``; the dart after it at its vertex becomes ``f1+``.
    The dart arrays are unchanged, only ``names`` differ.
    """
    if anchor is None:
        anchor = "e1+" if "e1+" in G.names else 0
    p = G.index(anchor) if isinstance(anchor, str) else int(anchor)
    if not G.is_regular(4):
        raise NotPair("normal labeling needs a 4-regular graph")
    curves = G.standard_curves()
    if len(curves) != 2:
        raise NotPair(f"expected 2 standard curves, found {len(curves)}")
    q = G.sigma0[p]
    if curves.dart_curve[p] == curves.dart_curve[q]:
        raise BadAnchor(
            f"both strands at the vertex of {G.names[p]!r} lie on the same curve", G.names[p]
        )
    succ = G.curve_successor()

    def trace(d):
        out = [d]
        x = succ[d]
        while x != d:
            out.append(x)
            x = succ[x]
        return out

    ecyc, fcyc = trace(p), trace(q)
    if len(ecyc) != len(fcyc):
        raise NotPair(
            f"curves have different lengths {len(ecyc)} and {len(fcyc)}; not a transverse pair"
        )
    names = [None] * G.n_darts
    for letter, cyc in (("e", ecyc), ("f", fcyc)):
        for i, d in enumerate(cyc, start=1):
            names[d] = f"{letter}{i}+"
            names[G.sigma1[d]] = f"{letter}{i}-"
    return FatGraph(G.sigma0, G.sigma1, names, check=False)


def check_anchor(G):
    if not G.is_decorated():
        raise NotPair("graph is not decorated")
    n_curves = len(G.standard_curves())
    if n_curves != 2:
        raise NotPair(f"expected 2 standard curves, found {n_curves}")
    m = _normal_index(G)
    if m is None:
        raise BadAnchor("graph is not in normal labeling (darts e1..em, f1..fm); see normal_labeling")
    v1 = G.name_seq(G.vertices()[G.vertex_of(G.index("e1+"))])
    want = ("e1+", "f1+", f"e{m}-", f"f{m}-")
    k = v1.index("e1+")
    if v1[k:] + v1[:k] != want:
        raise BadAnchor(f"anchor vertex reads {v1}, expected {want}", "e1+")
    return m


# -- connect sum with gamma -------------------------------------------------

def spliced_names(m):
    """Names of the four merged edges created by gluing at ``v1``/``u1``."""
    return {
        "e1": "x1-*e1",
        "em": f"e{m}*x6-",
        "f1": "y6*f1",
        "fm": f"f{m}*y1",
    }


def _sum_dart_map(m):
    s = spliced_names(m)
    return {
        "x1-": s["e1"] + "+",
        "e1-": s["e1"] + "-",
        f"e{m}+": s["em"] + "+",
        "x6+": s["em"] + "-",
        "y6+": s["f1"] + "+",
        "f1-": s["f1"] + "-",
        f"f{m}+": s["fm"] + "+",
        "y1-": s["fm"] + "-",
    }


def connect_sum_gamma(G):
    """Glue :func:`gamma` into ``G`` at ``v1 = (e1+, f1+, em-, fm-)`` and ``u1``.

    Both vertices are deleted and the four broken curve arcs are spliced,
    so each curve gains four edges, genus grows by two and the number of
    boundary walks is unchanged.  ``G`` must be in normal labeling.
    """
    m = check_anchor(G)
    G_v1 = G.vertex_of(G.index("e1+"))
    H = gamma()
    H_u1 = H.vertex_of(H.index("y1+"))
    rename = _sum_dart_map(m)
    cycles = []
    for graph, skip in ((G, G_v1), (H, H_u1)):
        for j, cyc in enumerate(graph.vertices()):
            if j == skip:
                continue
            cycles.append([rename.get(x, x) for x in graph.name_seq(cyc)])
    return build(cycles)


def _rewrite_rules(m):
    s = spliced_names(m)
    e1, em, f1, fm = s["e1"], s["em"], s["f1"], s["fm"]
    return {
        "f1-": ("e1+", (f1 + "-", "x4-", "y3-", e1 + "+")),
        f"e{m}+": (
            "f1+",
            (em + "+", "y5+", "x5+", "y4-", "x4+", "y5-", "x5-", f1 + "+"),
        ),
        f"f{m}+": (f"e{m}-", (fm + "+", "x3+", "y4+", em + "-")),
        "e1-": (
            f"f{m}-",
            (e1 + "-", "y2-", "x2-", "y3+", "x3-", "y2+", "x2+", fm + "-"),
        ),
    }


def predict_boundaries(walks, m=None):
    """Boundary walks of ``connect_sum_gamma(G)`` predicted from those of ``G``.

    ``walks`` are dart-name sequences in the ``EDGE_FIRST`` convention of a
    normally labeled graph.  Walks avoiding ``v1`` are returned unchanged;
    every visit to ``v1`` is expanded through the glued copy of gamma.
    """
    walks = [tuple(w) for w in walks]
    if m is None:
        idx = [int(mt.group(2)) for w in walks for x in w if (mt := _NORMAL.match(x))]
        if not idx:
            raise RuleNotApplicable("cannot infer m: no normally labeled darts")
        m = max(idx)
    rules = _rewrite_rules(m)
    seconds = {second: first for first, (second, _) in rules.items()}
    out = []
    for w in walks:
        if not w:
            continue
        # never start in the middle of a rewritten pair
        k = 0
        while w[k] in seconds and k < len(w) - 1:
            k += 1
        w = w[k:] + w[:k]
        new = []
        i = 0
        while i < len(w):
            a = w[i]
            if a in rules:
                second, replacement = rules[a]
                nxt = w[(i + 1) % len(w)]
                if nxt != second:
                    raise RuleNotApplicable(
                        f"{a!r} is followed by {nxt!r}, expected {second!r}", a
                    )
                new.extend(replacement)
                i += 2
            elif a in seconds:
                raise RuleNotApplicable(
                    f"{a!r} is not preceded by {seconds[a]!r}", a
                )
            else:
                new.append(a)
                i += 1
        out.append(tuple(new))
    return out


# -- the (g, k) recursion ------------------------------------------------------

def filling_pair(g, k):
    """Two-curve filling of the genus-``g`` surface with ``k`` complementary discs.

    Built from :func:`g2_pair` (even ``g``) or :func:`g3_pair` (odd ``g``)
    by repeated :func:`connect_sum_gamma`.  The result is normally labeled
    with ``2g - 2 + k`` vertices.
    """
    if g < 2:
        raise FatGraphError(f"genus must be at least 2, got {g}")
    if k < 1:
        raise KTooSmall(f"k must be at least 1, got {k}")
    if (g, k) == (2, 1):
        raise Excluded21("the genus-2 surface has no minimal filling pair")
    if g % 2 == 0 and k == 1:
        raise EvenGenusKOne(
            f"(g={g}, k=1): the genus-2 base needs k >= 2, so the recursion does not reach it"
        )
    if g % 2 == 0:
        G, base = g2_pair(k), 2
    else:
        G, base = g3_pair(k), 3
    for _ in range((g - base) // 2):
        G = normal_labeling(connect_sum_gamma(G), anchor=spliced_names(0)["e1"] + "+")
    return G


def published_boundary(G):
    """Boundary walks of ``G`` as name tuples in the family convention."""
    return [G.name_seq(w) for w in G.boundary_walks(EDGE_FIRST)]
