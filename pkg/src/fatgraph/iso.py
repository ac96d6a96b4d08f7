"""Orientation-preserving fat-graph isomorphism via canonical codes.

The code of a connected fat graph is computed by a vertex-block BFS from
a root dart: the root's whole sigma0 cycle is labeled first, then darts are
processed in label order and each unlabeled ``sigma1`` partner opens a new
block.  Writing down ``(label(sigma0(d)), label(sigma1(d)))`` in label order
gives a word that only depends on the rooted graph; the minimum over all
roots is an isomorphism invariant that separates non-isomorphic graphs.
"""

from .core import FatGraph
from .errors import Disconnected, NotABijection


def _labeling(sigma0, sigma1, root, best=None):
    """BFS labeling from ``root``.

    Returns ``(code, order)`` where ``order[i]`` is the dart labeled ``i``.
    If ``best`` is given and the code would exceed it lexicographically the
    search stops early and ``None`` is returned.
    """
    n = len(sigma0)
    label = [-1] * n
    order = []

    def open_block(d):
        while label[d] < 0:
            label[d] = len(order)
            order.append(d)
            d = sigma0[d]

    open_block(root)
    code = []
    smaller = best is None
    i = 0
    while i < len(order):
        d = order[i]
        e = sigma1[d]
        if label[e] < 0:
            open_block(e)
        a, b = label[sigma0[d]], label[e]
        if not smaller:
            pos = 2 * i
            ba, bb = best[pos], best[pos + 1]
            if (a, b) > (ba, bb):
                return None
            if (a, b) < (ba, bb):
                smaller = True
        code.append(a)
        code.append(b)
        i += 1
    if len(order) < n:
        raise Disconnected("canonical code needs a connected fat graph")
    return code, order


def _minimal_labelings(G):
    """All (code, order) pairs attaining the minimal code."""
    s0, s1 = G.sigma0, G.sigma1
    best, orders = None, []
    for root in range(G.n_darts):
        res = _labeling(s0, s1, root, best)
        if res is None:
            continue
        code, order = res
        if best is None or code < best:
            best, orders = code, [order]
        else:
            orders.append(order)
    return best, orders


def encode_code(n, code):
    width = max(1, ((n - 1).bit_length() + 7) // 8)
    return n.to_bytes(4, "big") + b"".join(x.to_bytes(width, "big") for x in code)


def canonical_code(G):
    """Relabeling-invariant byte string; equal iff isomorphic (connected ``G``).

    Use ``.hex()`` on the result for a printable dedup key.
    """
    if not G.is_connected():
        raise Disconnected("canonical code needs a connected fat graph")
    best, _ = _minimal_labelings(G)
    return encode_code(G.n_darts, best)


def automorphism_count(G):
    """Number of orientation-preserving automorphisms of a connected graph."""
    if not G.is_connected():
        raise Disconnected("automorphisms computed for connected graphs only")
    return len(_minimal_labelings(G)[1])


def canonical_form(G):
    """``G`` relabeled so dart ``i`` is the ``i``-th dart of a minimal labeling."""
    if not G.is_connected():
        raise Disconnected("canonical form needs a connected fat graph")
    _, orders = _minimal_labelings(G)
    order = orders[0]
    perm = [0] * G.n_darts
    for new, old in enumerate(order):
        perm[old] = new
    return relabel(G, perm)


def relabel(G, perm):
    """Conjugate ``G`` by the dart bijection ``perm`` (old index -> new index)."""
    perm = list(perm)
    n = G.n_darts
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotABijection(f"relabeling must be a permutation of range({n})")
    sigma0 = [0] * n
    sigma1 = [0] * n
    names = [None] * n
    for d in range(n):
        sigma0[perm[d]] = perm[G.sigma0[d]]
        sigma1[perm[d]] = perm[G.sigma1[d]]
        names[perm[d]] = G.names[d]
    return FatGraph(sigma0, sigma1, names, check=False)


def mirror(G):
    """Same graph with every cyclic order reversed (orientation flipped)."""
    return FatGraph(G.sigma0_inverse, G.sigma1, G.names, check=False)


def restrict(G, darts):
    """Sub-fat-graph on a union of components, reindexed by sorted dart order."""
    darts = sorted(darts)
    index = {d: i for i, d in enumerate(darts)}
    return FatGraph(
        [index[G.sigma0[d]] for d in darts],
        [index[G.sigma1[d]] for d in darts],
        [G.names[d] for d in darts],
        check=False,
    )


def component_codes(G):
    """Sorted canonical codes of the connected components (a multiset key)."""
    return tuple(sorted(canonical_code(restrict(G, comp)) for comp in G.components()))


def find_isomorphism(G, H):
    """A dart map ``f`` (list, ``f[d]`` in ``H``) with ``f.s0 = s0'.f`` and
    ``f.s1 = s1'.f``, or ``None`` when the connected graphs differ."""
    if G.n_darts != H.n_darts:
        return None
    code_g, orders_g = _minimal_labelings(G)
    code_h, orders_h = _minimal_labelings(H)
    if code_g != code_h:
        return None
    f = [0] * G.n_darts
    for dg, dh in zip(orders_g[0], orders_h[0]):
        f[dg] = dh
    return f


def are_isomorphic(G, H, up_to_reflection=False):
    """Orientation-preserving isomorphism test.

    Connected graphs are compared by canonical code, disconnected ones by
    the multiset of component codes.  Mirror images are distinct unless
    ``up_to_reflection`` is set.
    """
    if G.n_darts != H.n_darts:
        return False
    if G.is_connected() and H.is_connected():
        if canonical_code(G) == canonical_code(H):
            return True
    elif component_codes(G) == component_codes(H):
        return True
    if up_to_reflection:
        return are_isomorphic(G, mirror(H))
    return False
