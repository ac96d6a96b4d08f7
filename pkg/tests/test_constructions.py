import random

import published_orbits as P
import pytest
from conftest import cyclic_key, random_permutation

from fatgraph.constructions import (
    check_anchor,
    connect_sum_gamma,
    f2_two_disc_pair,
    filling_pair,
    g2_pair,
    g3_pair,
    gamma,
    normal_labeling,
    predict_boundaries,
    published_boundary,
    theta,
)
from fatgraph.core import EDGE_FIRST
from fatgraph.errors import (
    BadAnchor,
    EvenGenusKOne,
    Excluded21,
    FatGraphError,
    KTooSmall,
    NotPair,
    RuleNotApplicable,
)
from fatgraph.iso import are_isomorphic, relabel


def walk_set(walks):
    return sorted(cyclic_key(w) for w in walks)


def invariants(G):
    inv = G.surface_invariants()
    dec = G.standard_curves()
    return inv.V, inv.E1, inv.B, inv.genus, len(dec), dec.all_simple


# -- published walks ---------------------------------------------------------------

@pytest.mark.parametrize(
    "graph, published",
    [
        (f2_two_disc_pair, P.FIG8),
        (gamma, P.GAMMA),
        (lambda: g2_pair(4), P.G2_EVEN_K4),
        (lambda: g2_pair(5), P.G2_ODD_K5),
        (lambda: g3_pair(1), P.G3_ODD_K1),
        (lambda: g3_pair(4), P.G3_EVEN_K4),
    ],
)
def test_published_walks(graph, published):
    assert walk_set(published_boundary(graph())) == walk_set(published)


def test_printed_odd_case_is_not_a_partition():
    darts = [d for w in P.G2_ODD_K5_AS_PRINTED for d in w]
    assert len(darts) != len(set(darts))
    assert darts.count("e3+") == 2


def test_printed_genus3_k1_matches_as_a_set():
    got = published_boundary(g3_pair(1))
    assert sorted(got[0]) == sorted(P.G3_ODD_K1_AS_PRINTED[0])
    assert walk_set(got) != walk_set(P.G3_ODD_K1_AS_PRINTED)


def test_gamma_invariants():
    inv = gamma().surface_invariants()
    assert (inv.V, inv.E1, inv.B, inv.genus) == (6, 12, 4, 2)


# -- families ---------------------------------------------------------------------------

@pytest.mark.parametrize("k", range(2, 21))
def test_g2_family(k):
    assert invariants(g2_pair(k)) == (k + 2, 2 * k + 4, k, 2, 2, True)


@pytest.mark.parametrize("k", range(1, 21))
def test_g3_family(k):
    assert invariants(g3_pair(k)) == (k + 4, 2 * k + 8, k, 3, 2, True)


def test_family_bounds():
    with pytest.raises(KTooSmall):
        g2_pair(1)
    with pytest.raises(KTooSmall):
        g3_pair(0)


def test_families_in_normal_labeling():
    for G in [g2_pair(2), g2_pair(7), g3_pair(1), g3_pair(6), f2_two_disc_pair()]:
        check_anchor(G)


# -- normal labeling ------------------------------------------------------------------------

def test_normal_labeling_recovers_names():
    G = g2_pair(6)
    rng = random.Random(1)
    H = relabel(G, random_permutation(G.n_darts, rng))
    scrambled = type(H)(H.sigma0, H.sigma1, [f"z{i}" for i in range(H.n_darts)])
    N = normal_labeling(scrambled, anchor=H.index("e1+"))
    assert sorted(N.names) == sorted(G.names)
    assert walk_set(published_boundary(N)) == walk_set(published_boundary(G))


def test_normal_labeling_errors():
    with pytest.raises(NotPair):
        normal_labeling(theta())
    with pytest.raises(NotPair):
        normal_labeling(gamma().__class__(*_three_curve_graph()))


def _three_curve_graph():
    from fatgraph.enumeration import EnumFilter, enumerate_graphs

    G = enumerate_graphs(EnumFilter(vertex_count=3, curve_count=3))[0]
    return G.sigma0, G.sigma1, G.names


def test_any_anchor_yields_normal_labeling():
    G = g2_pair(5)
    for d in range(G.n_darts):
        check_anchor(normal_labeling(G, anchor=d))


def test_bad_anchor():
    # gamma is a filling pair but its darts are not named e1.., f1..
    with pytest.raises(BadAnchor):
        check_anchor(gamma())
    G, d = _self_crossing_pair()
    with pytest.raises(BadAnchor):
        normal_labeling(G, anchor=d)


def _self_crossing_pair():
    """A two-curve graph and a dart at a vertex where one curve meets itself."""
    from fatgraph.enumeration import EnumFilter, enumerate_graphs

    flt = EnumFilter(vertex_count=3, curve_count=2, require_simple_curves=False)
    for G in enumerate_graphs(flt):
        dec = G.standard_curves()
        for cyc, strands in zip(G.vertices(), dec.vertex_strands):
            if strands[0] == strands[1]:
                return G, cyc[0]
    raise AssertionError("no self-crossing two-curve graph at v=3")


# -- connect sum ---------------------------------------------------------------------------

def bases():
    yield from (g2_pair(k) for k in range(2, 11))
    yield from (g3_pair(k) for k in range(1, 11))


def test_connect_sum_oracle():
    for G in bases():
        S = connect_sum_gamma(G)
        predicted = predict_boundaries(published_boundary(G))
        assert walk_set(predicted) == walk_set(published_boundary(S))
        a, b = G.surface_invariants(), S.surface_invariants()
        assert b.genus == a.genus + 2 and b.B == a.B
        assert S.n_darts == G.n_darts + 16


def test_connect_sum_curve_lengths():
    G = g2_pair(3)
    S = connect_sum_gamma(G)
    m = len(G.standard_curves().curves[0])
    assert S.standard_curves().lengths == (m + 4, m + 4)


def test_connect_sum_requires_normal_labeling():
    with pytest.raises(BadAnchor):
        connect_sum_gamma(gamma())
    with pytest.raises(NotPair):
        connect_sum_gamma(theta())


def test_predict_rejects_broken_pair():
    walks = published_boundary(g2_pair(4))
    broken = [tuple(x for x in w if x != "e1+") for w in walks]
    with pytest.raises(RuleNotApplicable):
        predict_boundaries(broken, m=6)


# -- recursion -------------------------------------------------------------------------

def test_recursion_sweep():
    for g in range(2, 13):
        for k in range(1, 21):
            if (g, k) == (2, 1) or (g % 2 == 0 and k == 1):
                continue
            G = filling_pair(g, k)
            n = 2 * g - 2 + k
            assert invariants(G) == (n, 2 * n, k, g, 2, True), (g, k)


def test_recursion_errors():
    with pytest.raises(Excluded21):
        filling_pair(2, 1)
    for g in (4, 6, 12):
        with pytest.raises(EvenGenusKOne):
            filling_pair(g, 1)
    with pytest.raises(FatGraphError):
        filling_pair(1, 3)
    with pytest.raises(KTooSmall):
        filling_pair(3, 0)


def test_recursion_base_cases():
    assert are_isomorphic(filling_pair(2, 5), g2_pair(5))
    assert are_isomorphic(filling_pair(3, 1), g3_pair(1))


def test_minimal_pairs_for_odd_genus():
    for g in (3, 5, 7):
        rep = filling_pair(g, 1).classify_filling()
        assert rep.minimal and rep.is_filling_pair


def test_recursion_walks_follow_oracle():
    G = filling_pair(5, 3)
    prev = filling_pair(3, 3)
    assert len(G.boundary_walks(EDGE_FIRST)) == len(prev.boundary_walks(EDGE_FIRST)) == 3
