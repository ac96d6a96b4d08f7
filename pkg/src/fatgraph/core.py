"""Fat graphs as pairs of permutations on darts.

A dart is one orientation of an edge and is identified by an integer in
``range(n_darts)``.  ``sigma0`` rotates counterclockwise through the darts
leaving a vertex, ``sigma1`` swaps each dart with its reversal.  Every other
structure (vertices, boundary walks, curves) is an orbit decomposition of
some word in these two permutations.
"""

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import (
    DuplicateDart,
    EmptyGraph,
    FixedPointInPairing,
    NotDecorated,
    OddEuler,
    UnpairedDart,
)

#: sigma_inf(d) = sigma1(sigma0^-1(d)); reproduces the theta-graph faces verbatim
VERTEX_FIRST = "vertex_first"
#: sigma_inf(d) = sigma0^-1(sigma1(d)); the order used by the genus-2/3 families
EDGE_FIRST = "edge_first"
CONVENTIONS = (VERTEX_FIRST, EDGE_FIRST)


def _orbits(perm):
    """Cycles of ``perm``, sorted by minimal element, each starting there."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = perm[d]
        out.append(tuple(cycle))
    return out


def _check_permutation(perm, what):
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{what} is not a permutation of range({n})")


def signed_partner(name):
    """Reversal of a signed dart name: ``"e1+" <-> "e1-"``.

    Returns ``None`` when the name carries no sign suffix.  The Unicode
    minus sign is accepted as a synonym for ``-``.
    """
    if not name:
        return None
    sign = name[-1]
    if sign == "+":
        return name[:-1] + "-"
    if sign in ("-", "−"):
        return name[:-1] + "+"
    return None


def normalize_dart_name(name):
    if name.endswith("−"):
        return name[:-1] + "-"
    return name


@dataclass(frozen=True)
class SurfaceInvariants:
    """Counts for the closed surface obtained by capping every boundary walk."""

    V: int
    E1: int
    B: int
    chi: int
    genus: Optional[int]
    connected: bool

    def as_dict(self):
        return {
            "V": self.V,
            "E1": self.E1,
            "B": self.B,
            "chi": self.chi,
            "genus": self.genus,
            "connected": self.connected,
        }


@dataclass(frozen=True)
class CurveDecomposition:
    """Standard cycles of a decorated fat graph.

    ``curves[i]`` is one orientation of curve ``i`` as a cyclic dart
    sequence; ``reversals[i]`` is the opposite orientation.  ``dart_curve``
    maps every dart to the index of the curve it runs along and
    ``vertex_strands[j]`` lists, for vertex ``j`` (in :meth:`FatGraph.vertices`
    order), the curve using each of its ``deg/2`` strands.
    """

    curves: tuple
    reversals: tuple
    simple: tuple
    dart_curve: tuple
    vertex_strands: tuple

    def __len__(self):
        return len(self.curves)

    @property
    def lengths(self):
        return tuple(len(c) for c in self.curves)

    @property
    def all_simple(self):
        return all(self.simple)


@dataclass(frozen=True)
class FillingReport:
    connected: bool
    decorated: bool
    all_simple: bool
    n_curves: Optional[int]
    curve_lengths: Optional[tuple]
    B: int
    genus: Optional[int]
    bigon_count: int
    reasons: tuple

    @property
    def is_filling_representation(self):
        return self.connected and self.decorated and self.all_simple

    @property
    def minimal(self):
        return self.B == 1

    @property
    def is_filling_pair(self):
        return self.is_filling_representation and self.n_curves == 2

    def summary(self):
        if not self.is_filling_representation:
            return "not a filling: " + "; ".join(self.reasons)
        kind = {2: "filling pair", 3: "filling triple", 4: "filling quadruple"}.get(
            self.n_curves, f"filling by {self.n_curves} curves"
        )
        text = f"{kind}, genus {self.genus}, discs={self.B}"
        if self.minimal:
            text += " (minimal)"
        return text

    def as_dict(self):
        return {
            "is_filling_representation": self.is_filling_representation,
            "connected": self.connected,
            "decorated": self.decorated,
            "all_simple": self.all_simple,
            "n_curves": self.n_curves,
            "curve_lengths": list(self.curve_lengths) if self.curve_lengths else None,
            "B": self.B,
            "minimal": self.minimal,
            "genus": self.genus,
            "bigon_count": self.bigon_count,
            "reasons": list(self.reasons),
        }


class FatGraph:
    """Immutable fat (ribbon) graph.

    Parameters
    ----------
    sigma0 : sequence of int
        Vertex rotation, as an array ``sigma0[d]``.
    sigma1 : sequence of int
        Fixed-point-free involution pairing each dart with its reversal.
    names : sequence of str, optional
        Human-readable dart labels; defaults to ``"d0", "d1", ...``.
    """

    __slots__ = ("sigma0", "sigma1", "names", "_inv0", "_index", "_vertex_of")

    def __init__(self, sigma0, sigma1, names=None, check=True):
        sigma0 = tuple(sigma0)
        sigma1 = tuple(sigma1)
        n = len(sigma0)
        if names is None:
            names = tuple(f"d{i}" for i in range(n))
        else:
            names = tuple(names)
        if check:
            if n == 0:
                raise EmptyGraph("a fat graph needs at least one dart")
            if len(sigma1) != n or len(names) != n:
                raise ValueError("sigma0, sigma1 and names must have equal length")
            _check_permutation(sigma0, "sigma0")
            _check_permutation(sigma1, "sigma1")
            for d in range(n):
                if sigma1[d] == d:
                    raise FixedPointInPairing(
                        f"dart {names[d]!r} is paired with itself", names[d]
                    )
                if sigma1[sigma1[d]] != d:
                    raise UnpairedDart(f"sigma1 is not an involution at {names[d]!r}", names[d])
            if len(set(names)) != n:
                dup = next(x for x in names if names.count(x) > 1)
                raise DuplicateDart(f"dart name {dup!r} used twice", dup)
        inv0 = [0] * n
        for d, e in enumerate(sigma0):
            inv0[e] = d
        object.__setattr__(self, "sigma0", sigma0)
        object.__setattr__(self, "sigma1", sigma1)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_inv0", tuple(inv0))
        object.__setattr__(self, "_index", None)
        object.__setattr__(self, "_vertex_of", None)

    def __setattr__(self, key, value):
        raise AttributeError("FatGraph is immutable")

    def __reduce__(self):
        return (type(self), (self.sigma0, self.sigma1, self.names, False))

    def __eq__(self, other):
        if not isinstance(other, FatGraph):
            return NotImplemented
        return (self.sigma0, self.sigma1, self.names) == (
            other.sigma0,
            other.sigma1,
            other.names,
        )

    def __hash__(self):
        return hash((self.sigma0, self.sigma1, self.names))

    def __repr__(self):
        cycles = "".join(
            "(" + ",".join(self.names[d] for d in c) + ")" for c in self.vertices()
        )
        return f"FatGraph({cycles})"

    # -- basic accessors -------------------------------------------------
    @property
    def n_darts(self):
        return len(self.sigma0)

    @property
    def n_edges(self):
        return len(self.sigma0) // 2

    @property
    def sigma0_inverse(self):
        return self._inv0

    def index(self, name):
        """Dart index for a dart name."""
        if self._index is None:
            object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.names)})
        try:
            return self._index[normalize_dart_name(name)]
        except KeyError:
            raise KeyError(f"no dart named {name!r}") from None

    def name_seq(self, darts):
        return tuple(self.names[d] for d in darts)

    def vertex_of(self, dart):
        """Index (in :meth:`vertices` order) of the vertex ``dart`` leaves."""
        if self._vertex_of is None:
            vo = [0] * self.n_darts
            for j, cyc in enumerate(self.vertices()):
                for d in cyc:
                    vo[d] = j
            object.__setattr__(self, "_vertex_of", tuple(vo))
        return self._vertex_of[dart]

    # -- orbit structures -------------------------------------------------
    def vertices(self):
        """sigma0 cycles, ordered by their minimal dart."""
        return _orbits(self.sigma0)

    def degrees(self):
        return [len(c) for c in self.vertices()]

    def is_decorated(self):
        return all(k >= 4 and k % 2 == 0 for k in self.degrees())

    def is_regular(self, k=4):
        return all(deg == k for deg in self.degrees())

    def face_permutation(self, convention=VERTEX_FIRST):
        s0i, s1 = self._inv0, self.sigma1
        if convention == VERTEX_FIRST:
            return tuple(s1[s0i[d]] for d in range(self.n_darts))
        if convention == EDGE_FIRST:
            return tuple(s0i[s1[d]] for d in range(self.n_darts))
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")

    def boundary_walks(self, convention=VERTEX_FIRST):
        """Orbits of sigma_inf: one tuple of darts per boundary component.

        With the default convention ``sigma_inf = sigma1 . sigma0^-1``; pass
        ``convention=EDGE_FIRST`` for ``sigma0^-1 . sigma1``.  Both give the
        same faces; each walk of one convention is the sigma1-image of a
        walk of the other.
        """
        return _orbits(self.face_permutation(convention))

    def is_connected(self):
        n = self.n_darts
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            d = stack.pop()
            for e in (self.sigma0[d], self.sigma1[d]):
                if not seen[e]:
                    seen[e] = True
                    count += 1
                    stack.append(e)
        return count == n

    def components(self):
        """Dart sets of the connected components, ordered by minimal dart."""
        n = self.n_darts
        comp = [-1] * n
        out = []
        for start in range(n):
            if comp[start] >= 0:
                continue
            c = len(out)
            comp[start] = c
            stack = [start]
            members = []
            while stack:
                d = stack.pop()
                members.append(d)
                for e in (self.sigma0[d], self.sigma1[d]):
                    if comp[e] < 0:
                        comp[e] = c
                        stack.append(e)
            out.append(tuple(sorted(members)))
        return out

    def surface_invariants(self):
        V = len(self.vertices())
        E1 = self.n_edges
        B = len(self.boundary_walks())
        chi = V - E1 + B
        connected = self.is_connected()
        genus = None
        if connected:
            if chi % 2:
                raise OddEuler(f"connected fat graph with odd Euler characteristic {chi}")
            genus = (2 - chi) // 2
        return SurfaceInvariants(V=V, E1=E1, B=B, chi=chi, genus=genus, connected=connected)

    def genus(self):
        return self.surface_invariants().genus

    # -- curves -----------------------------------------------------------
    def curve_successor(self):
        """Straight-through continuation ``d -> sigma0^(deg/2)(sigma1(d))``."""
        if not self.is_decorated():
            bad = [c for c in self.vertices() if len(c) < 4 or len(c) % 2]
            raise NotDecorated(
                f"vertex ({','.join(self.names[d] for d in bad[0])}) has degree {len(bad[0])}",
                self.names[bad[0][0]],
            )
        half = [0] * self.n_darts
        for cyc in self.vertices():
            h = len(cyc) // 2
            for i, d in enumerate(cyc):
                half[d] = cyc[(i + h) % len(cyc)]
        return tuple(half[self.sigma1[d]] for d in range(self.n_darts))

    def standard_curves(self):
        succ = self.curve_successor()
        s1 = self.sigma1
        dart_curve = [-1] * self.n_darts
        curves, reversals, simple = [], [], []
        for orbit in _orbits(succ):
            if dart_curve[orbit[0]] >= 0:
                continue
            idx = len(curves)
            rev = tuple(s1[d] for d in reversed(orbit))
            # rotate so the reversal also starts at its own minimal dart
            k = rev.index(min(rev))
            rev = rev[k:] + rev[:k]
            for d in orbit + rev:
                dart_curve[d] = idx
            tails = [self.vertex_of(d) for d in orbit]
            curves.append(orbit)
            reversals.append(rev)
            simple.append(len(set(tails)) == len(tails))
        strands = []
        for cyc in self.vertices():
            h = len(cyc) // 2
            strands.append(tuple(dart_curve[cyc[i]] for i in range(h)))
        return CurveDecomposition(
            curves=tuple(curves),
            reversals=tuple(reversals),
            simple=tuple(simple),
            dart_curve=tuple(dart_curve),
            vertex_strands=tuple(strands),
        )

    def classify_filling(self):
        reasons = []
        inv = self.surface_invariants()
        if not inv.connected:
            reasons.append("disconnected")
        decorated = self.is_decorated()
        n_curves = lengths = None
        all_simple = False
        if decorated:
            curves = self.standard_curves()
            n_curves = len(curves)
            lengths = curves.lengths
            all_simple = curves.all_simple
            if not all_simple:
                reasons.append("curve not simple")
        else:
            reasons.append("not decorated")
        bigons = sum(1 for w in self.boundary_walks() if len(w) == 2)
        return FillingReport(
            connected=inv.connected,
            decorated=decorated,
            all_simple=all_simple,
            n_curves=n_curves,
            curve_lengths=lengths,
            B=inv.B,
            genus=inv.genus,
            bigon_count=bigons,
            reasons=tuple(reasons),
        )


def build(vertex_cycles: Sequence[Sequence[str]], pairing: Optional[Mapping[str, str]] = None):
    """Build a validated :class:`FatGraph` from named vertex cycles.

    ``vertex_cycles`` lists each vertex's darts in counterclockwise order.
    ``pairing`` maps every dart name to its reversal; when omitted the
    reversal is read off the ``+``/``-`` suffix of each name.  Dart indices
    follow first appearance in ``vertex_cycles``.
    """
    names = []
    seen = set()
    cycles = []
    for cyc in vertex_cycles:
        cyc = [normalize_dart_name(x) for x in cyc]
        if not cyc:
            raise EmptyGraph("empty vertex cycle")
        for x in cyc:
            if x in seen:
                raise DuplicateDart(f"dart {x!r} appears more than once", x)
            seen.add(x)
            names.append(x)
        cycles.append(cyc)
    if not names:
        raise EmptyGraph("a fat graph needs at least one dart")

    if pairing is None:
        partner_of = signed_partner
    else:
        pairing = {normalize_dart_name(k): normalize_dart_name(v) for k, v in pairing.items()}
        for k in pairing:
            if k not in seen:
                raise UnpairedDart(f"pairing mentions unknown dart {k!r}", k)
        partner_of = pairing.get

    index = {x: i for i, x in enumerate(names)}
    sigma1 = [0] * len(names)
    for x in names:
        y = partner_of(x)
        if y == x:
            raise FixedPointInPairing(f"dart {x!r} is paired with itself", x)
        if y is None or y not in index:
            raise UnpairedDart(f"dart {x!r} has no reversal", x)
        if partner_of(y) != x:
            raise UnpairedDart(f"pairing is not an involution at {x!r}", x)
        sigma1[index[x]] = index[y]

    sigma0 = [0] * len(names)
    for cyc in cycles:
        for i, x in enumerate(cyc):
            sigma0[index[x]] = index[cyc[(i + 1) % len(cyc)]]
    return FatGraph(sigma0, sigma1, names)


def disjoint_union(*graphs):
    """Disjoint union; dart names get a ``"<i>:"`` prefix to stay unique."""
    sigma0, sigma1, names = [], [], []
    for i, G in enumerate(graphs):
        off = len(sigma0)
        sigma0.extend(off + d for d in G.sigma0)
        sigma1.extend(off + d for d in G.sigma1)
        names.extend(f"{i}:{x}" for x in G.names)
    return FatGraph(sigma0, sigma1, names)
