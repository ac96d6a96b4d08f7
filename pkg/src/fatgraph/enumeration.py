"""Exhaustive census of 4-regular fat graphs on a few vertices.

Two generators produce the same set of isomorphism classes:

``"rooted"`` (default)
    Builds connected graphs dart by dart in the same vertex-block BFS order
    used by :func:`fatgraph.iso.canonical_code`, so each generated array *is*
    the code from root 0.  A graph is kept only if no other root gives a
    smaller code, which emits every class exactly once.
``"involutions"``
    Fixes ``sigma0`` as ``v`` disjoint 4-cycles and runs through all
    ``(4v-1)!!`` fixed-point-free involutions, deduplicating by code.  Slow
    but simple; kept as a cross-check and for disconnected graphs.
"""

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Optional

from .core import FatGraph, disjoint_union
from .errors import TooLarge
from .iso import _labeling, canonical_code, canonical_form, component_codes, restrict

DEFAULT_LIMIT = 5
LIMIT_ENV = "FATGRAPH_ENUM_LIMIT"
METHODS = ("rooted", "involutions")

_SHARD_DEPTH = 2


def enum_limit():
    try:
        return int(os.environ[LIMIT_ENV])
    except (KeyError, ValueError):
        return DEFAULT_LIMIT


def _check_size(v):
    if v < 1:
        raise ValueError(f"vertex_count must be positive, got {v}")
    limit = enum_limit()
    if v > limit:
        raise TooLarge(
            f"vertex_count {v} exceeds the enumeration limit {limit} "
            f"(raise it with {LIMIT_ENV})"
        )


def _block_sigma0(v):
    return tuple(4 * (d // 4) + (d + 1) % 4 for d in range(4 * v))


def _named(sigma0, sigma1):
    """Attach generic edge names ``a1, a2, ...``; the lower dart gets ``+``."""
    names = [None] * len(sigma0)
    j = 0
    for d in range(len(sigma0)):
        if names[d] is None:
            j += 1
            names[d] = f"a{j}+"
            names[sigma1[d]] = f"a{j}-"
    return FatGraph(sigma0, sigma1, names, check=False)


# -- rooted generation -----------------------------------------------------

def _rooted_codes(v, shard=(0, 1)):
    """sigma1 arrays of canonical connected 4-regular graphs on ``v`` vertices."""
    n = 4 * v
    s0 = _block_sigma0(v)
    s1 = [-1] * n
    out = []
    index, n_shards = shard
    counter = [0]

    def keep():
        code0 = _labeling(s0, s1, 0)[0]
        for r in range(1, n):
            res = _labeling(s0, s1, r, code0)
            if res is not None and res[0] < code0:
                return
        out.append(tuple(s1))

    def rec(d, nv, depth):
        if depth == _SHARD_DEPTH:
            counter[0] += 1
            if (counter[0] - 1) % n_shards != index:
                return
        while d < 4 * nv and s1[d] >= 0:
            d += 1
        if d == 4 * nv:
            if nv == v and (depth >= _SHARD_DEPTH or index == 0):
                keep()
            return
        for e in range(d + 1, 4 * nv):
            if s1[e] < 0:
                s1[d], s1[e] = e, d
                rec(d + 1, nv, depth + 1)
                s1[d] = s1[e] = -1
        if nv < v:
            e = 4 * nv
            s1[d], s1[e] = e, d
            rec(d + 1, nv + 1, depth + 1)
            s1[d] = s1[e] = -1

    rec(0, 1, 0)
    return out


# -- involution sweep ---------------------------------------------------------

def _involutions(n, shard=(0, 1)):
    """All fixed-point-free involutions of ``range(n)``; sharded on 0's partner."""
    s1 = [-1] * n
    index, n_shards = shard

    def rec(d):
        while d < n and s1[d] >= 0:
            d += 1
        if d == n:
            yield tuple(s1)
            return
        for e in range(d + 1, n):
            if s1[e] < 0:
                if d == 0 and (e - 1) % n_shards != index:
                    continue
                s1[d], s1[e] = e, d
                yield from rec(d + 1)
                s1[d] = s1[e] = -1

    yield from rec(0)


def _sweep(v, connected_only, shard=(0, 1)):
    s0 = _block_sigma0(v)
    found = {}
    for s1 in _involutions(4 * v, shard):
        G = FatGraph(s0, s1, check=False)
        if G.is_connected():
            key = (canonical_code(G),)
        elif connected_only:
            continue
        else:
            key = component_codes(G)
        found.setdefault(key, s1)
    return found


# -- class lists -----------------------------------------------------------------

def _run_sharded(fn, args, jobs):
    if jobs <= 1:
        return [fn(*args, (0, 1))]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *args, (i, jobs)) for i in range(jobs)]
        return [f.result() for f in futures]


def connected_classes(v, method="rooted", jobs=1):
    """Canonical representatives of connected 4-regular fat graphs, by code."""
    _check_size(v)
    return _connected_classes(v, method, jobs)


@lru_cache(maxsize=None)
def _connected_classes(v, method, jobs):
    s0 = _block_sigma0(v)
    if method == "rooted":
        arrays = [a for part in _run_sharded(_rooted_codes, (v,), jobs) for a in part]
        graphs = [_named(s0, s1) for s1 in arrays]
    elif method == "involutions":
        merged = {}
        for part in _run_sharded(_sweep, (v, True), jobs):
            for key, s1 in part.items():
                merged.setdefault(key, s1)
        graphs = [_canonical_rep(FatGraph(s0, s1, check=False)) for s1 in merged.values()]
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    graphs.sort(key=canonical_code)
    return tuple(graphs)


def _canonical_rep(G):
    C = canonical_form(G)
    return _named(C.sigma0, C.sigma1)


def _partitions(v, largest=None):
    if largest is None:
        largest = v
    if v == 0:
        yield ()
        return
    for part in range(min(v, largest), 0, -1):
        for rest in _partitions(v - part, part):
            yield (part,) + rest


def class_key(G):
    """Printable class key: the code, or ``+``-joined component codes."""
    if G.is_connected():
        return canonical_code(G).hex()
    return "+".join(c.hex() for c in component_codes(G))


def all_classes(v, method="rooted", jobs=1):
    """Connected and disconnected classes on exactly ``v`` vertices."""
    _check_size(v)
    return _all_classes(v, method, jobs)


@lru_cache(maxsize=None)
def _all_classes(v, method, jobs):
    if method == "involutions":
        s0 = _block_sigma0(v)
        merged = {}
        for part in _run_sharded(_sweep, (v, False), jobs):
            for key, s1 in part.items():
                merged.setdefault(key, s1)
        graphs = []
        for s1 in merged.values():
            G = FatGraph(s0, s1, check=False)
            graphs.append(_canonical_rep(G) if G.is_connected() else _union_rep(G))
    else:
        graphs = []
        for parts in _partitions(v):
            sizes = Counter(parts)
            choices = [
                list(combinations_with_replacement(_connected_classes(size, method, jobs), count))
                for size, count in sorted(sizes.items())
            ]
            for combo in product(*choices):
                comps = [g for group in combo for g in group]
                G = comps[0] if len(comps) == 1 else _union_rep(disjoint_union(*comps))
                graphs.append(G)
    graphs.sort(key=class_key)
    return tuple(graphs)


def _union_rep(G):
    comps = sorted(
        (canonical_form(restrict(G, c)) for c in G.components()), key=canonical_code
    )
    U = disjoint_union(*comps)
    return _named(U.sigma0, U.sigma1)


# -- filtering -----------------------------------------------------------------------

@dataclass(frozen=True)
class EnumFilter:
    """Which classes :func:`enumerate_graphs` returns.

    ``curve_lengths`` is compared as a multiset.  Optional fields left as
    ``None`` do not constrain the result.
    """

    vertex_count: int
    require_connected: bool = True
    curve_count: Optional[int] = None
    boundary_count: Optional[int] = None
    require_simple_curves: bool = True
    curve_lengths: Optional[tuple] = None

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be at least 1")
        if self.curve_lengths is not None:
            object.__setattr__(
                self, "curve_lengths", tuple(sorted(self.curve_lengths, reverse=True))
            )

    def accepts(self, G):
        if self.require_connected and not G.is_connected():
            return False
        curves = G.standard_curves()
        if self.require_simple_curves and not curves.all_simple:
            return False
        if self.curve_count is not None and len(curves) != self.curve_count:
            return False
        if (
            self.curve_lengths is not None
            and tuple(sorted(curves.lengths, reverse=True)) != self.curve_lengths
        ):
            return False
        if self.boundary_count is not None and len(G.boundary_walks()) != self.boundary_count:
            return False
        return True


def enumerate_graphs(flt, method="rooted", jobs=1):
    """One canonical representative per class passing ``flt``, sorted by key."""
    if flt.require_connected:
        pool = connected_classes(flt.vertex_count, method, jobs)
    else:
        pool = all_classes(flt.vertex_count, method, jobs)
    return [G for G in pool if flt.accepts(G)]


# -- classification table ----------------------------------------------------------

@dataclass
class TableRow:
    n_curves: int
    boundaries: int
    simple: bool
    curve_lengths: tuple
    count: int = 0
    bigon_classes: int = 0
    representatives: list = field(default_factory=list)

    @property
    def key(self):
        return (self.n_curves, self.boundaries, self.simple, self.curve_lengths)


@dataclass
class ClassificationTable:
    vertex_count: int
    require_simple: bool
    rows: list

    def count(self, n_curves=None, boundaries=None, curve_lengths=None, simple=None):
        """Number of classes matching every given field."""
        if curve_lengths is not None:
            curve_lengths = tuple(sorted(curve_lengths, reverse=True))
        total = 0
        for r in self.rows:
            if n_curves is not None and r.n_curves != n_curves:
                continue
            if boundaries is not None and r.boundaries != boundaries:
                continue
            if curve_lengths is not None and r.curve_lengths != curve_lengths:
                continue
            if simple is not None and r.simple != simple:
                continue
            total += r.count
        return total

    @property
    def total(self):
        return sum(r.count for r in self.rows)

    def as_dict(self, graphs=True):
        from .io import graph_to_dict

        rows = []
        for r in self.rows:
            row = {
                "curves": r.n_curves,
                "boundaries": r.boundaries,
                "simple": r.simple,
                "curve_lengths": list(r.curve_lengths),
                "count": r.count,
                "bigon_classes": r.bigon_classes,
                "codes": [canonical_code(G).hex() for G in r.representatives],
            }
            if graphs:
                row["graphs"] = [graph_to_dict(G) for G in r.representatives]
            rows.append(row)
        return {
            "vertex_count": self.vertex_count,
            "require_simple": self.require_simple,
            "total": self.total,
            "rows": rows,
        }

    def to_text(self):
        header = ("curves", "B", "simple", "lengths", "classes", "w/ bigon")
        body = [
            (
                str(r.n_curves),
                str(r.boundaries),
                "yes" if r.simple else "no",
                "{" + ",".join(map(str, r.curve_lengths)) + "}",
                str(r.count),
                str(r.bigon_classes),
            )
            for r in self.rows
        ]
        widths = [max(len(x) for x in col) for col in zip(header, *body)]
        lines = [
            f"v={self.vertex_count}, connected, "
            + ("simple curves only" if self.require_simple else "all curves"),
            "  ".join(h.rjust(w) for h, w in zip(header, widths)),
        ]
        lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in body]
        lines.append(f"total classes: {self.total}")
        return "\n".join(lines) + "\n"


def classify_table(vertex_count, require_simple=True, method="rooted", jobs=1):
    """Histogram of connected classes by curves, boundaries and curve lengths."""
    rows = {}
    for G in connected_classes(vertex_count, method, jobs):
        curves = G.standard_curves()
        if require_simple and not curves.all_simple:
            continue
        walks = G.boundary_walks()
        key = (
            len(curves),
            len(walks),
            curves.all_simple,
            tuple(sorted(curves.lengths, reverse=True)),
        )
        row = rows.get(key)
        if row is None:
            row = rows[key] = TableRow(*key)
        row.count += 1
        row.bigon_classes += any(len(w) == 2 for w in walks)
        row.representatives.append(G)
    ordered = sorted(rows.values(), key=lambda r: (r.n_curves, r.boundaries, not r.simple, r.curve_lengths))
    return ClassificationTable(vertex_count, require_simple, ordered)


__all__ = [
    "EnumFilter",
    "ClassificationTable",
    "TableRow",
    "enumerate_graphs",
    "classify_table",
    "connected_classes",
    "all_classes",
    "class_key",
]
