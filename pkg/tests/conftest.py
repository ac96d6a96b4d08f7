import random

import pytest
from hypothesis import strategies as st

from fatgraph.core import FatGraph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def report_criterion():
    def record(label, ok, detail=""):
        line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


# -- random graphs ----------------------------------------------------------------

def random_involution(n, rng):
    darts = list(range(n))
    rng.shuffle(darts)
    s1 = [0] * n
    for a, b in zip(darts[::2], darts[1::2]):
        s1[a], s1[b] = b, a
    return s1


def random_rotation(n, rng, degrees=None):
    darts = list(range(n))
    rng.shuffle(darts)
    if degrees is None:
        degrees = []
        left = n
        while left:
            d = rng.randint(1, left)
            degrees.append(d)
            left -= d
    s0 = [0] * n
    i = 0
    for deg in degrees:
        cyc = darts[i : i + deg]
        for j, d in enumerate(cyc):
            s0[d] = cyc[(j + 1) % deg]
        i += deg
    return s0


def random_graph(rng, max_darts=24):
    n = 2 * rng.randint(1, max_darts // 2)
    return FatGraph(random_rotation(n, rng), random_involution(n, rng))


def random_four_regular(rng, v):
    n = 4 * v
    return FatGraph(random_rotation(n, rng, [4] * v), random_involution(n, rng))


def random_permutation(n, rng):
    p = list(range(n))
    rng.shuffle(p)
    return p


@st.composite
def fat_graphs(draw, max_darts=24):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_graph(random.Random(seed), max_darts)


@st.composite
def four_regular_graphs(draw, max_vertices=6):
    seed = draw(st.integers(0, 2**32 - 1))
    v = draw(st.integers(1, max_vertices))
    return random_four_regular(random.Random(seed), v)


# -- oracles ---------------------------------------------------------------------

def brute_isomorphic(G, H):
    """Search all dart bijections (with consistency pruning) for one that
    conjugates both permutations of ``G`` onto those of ``H``."""
    n = G.n_darts
    if n != H.n_darts:
        return False
    f = [None] * n
    used = [False] * n

    def consistent(upto):
        for a in range(upto + 1):
            for sg, sh in ((G.sigma0, H.sigma0), (G.sigma1, H.sigma1)):
                b = sg[a]
                if b <= upto and f[b] != sh[f[a]]:
                    return False
        return True

    def rec(d):
        if d == n:
            return True
        for x in range(n):
            if used[x]:
                continue
            f[d] = x
            used[x] = True
            if consistent(d) and rec(d + 1):
                return True
            used[x] = False
        f[d] = None
        return False

    return rec(0)


def orbits(perm):
    seen = [False] * len(perm)
    out = []
    for d in range(len(perm)):
        if not seen[d]:
            cyc = [d]
            seen[d] = True
            x = perm[d]
            while x != d:
                cyc.append(x)
                seen[x] = True
                x = perm[x]
            out.append(cyc)
    return out


def cyclic_key(seq):
    """Rotation-invariant key of a cyclic sequence."""
    seq = tuple(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq)))
