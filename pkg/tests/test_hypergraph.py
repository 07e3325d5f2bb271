import itertools
import math

import pytest
from hypothesis import given, strategies as st

from hyperturan import (ForbiddenFamily, Hypergraph, InvalidArgument, UnsupportedSize, blow_up,
                        build_B, build_giraud, canonical_form, complete, contains, count_copies,
                        degree, edgeless, induced, is_family_free, is_isomorphic, link, link_family,
                        min_l_degree, resolve_named, sylvester_hadamard)
from hyperturan.hypergraph import automorphism_count, count_injections, drop_isolated

from conftest import brute_injections, hypergraphs, relabel

K3 = complete(3, 2)
P3 = resolve_named("P3")


def test_edges_are_normalised():
    H = Hypergraph(3, 5, [(4, 0, 2), (1, 0, 3)])
    assert H.edges == ((0, 1, 3), (0, 2, 4))


@pytest.mark.parametrize("edges", [[(0, 1, 1)], [(0, 1)], [(0, 1, 5)], [(0, 1, 2), (2, 1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(InvalidArgument):
        Hypergraph(3, 5, edges)


def test_degree_examples(k4_3):
    assert degree(k4_3, (0, 1)) == 2
    assert degree(k4_3, ()) == 4
    assert degree(build_B(2, 4, 3, 2), (0, 1)) == 2
    assert degree(edgeless(6, 3), (1, 4)) == 0
    with pytest.raises(InvalidArgument):
        degree(k4_3, (0, 1, 2, 3))


def test_link_examples(k4_3):
    assert is_isomorphic(drop_isolated(link(k4_3, (0,))), K3)
    minus = resolve_named("K4_3_minus_e")
    low = [v for v in range(4) if degree(minus, (v,)) == 2]
    assert low
    for v in low:
        assert is_isomorphic(drop_isolated(link(minus, (v,))), P3)
    assert link(minus, ()) == minus
    with pytest.raises(InvalidArgument):
        link(k4_3, (0, 1, 2))


def test_min_l_degree_examples(k4_3):
    assert min_l_degree(k4_3, 2) == (2, (0, 1))
    assert min_l_degree(build_B(2, 4, 3, 2), 2)[0] == 2
    assert min_l_degree(k4_3, 0) == (4, ())
    for bad in (-1, 3):
        with pytest.raises(InvalidArgument):
            min_l_degree(k4_3, bad)


def test_min_l_degree_witness_is_lex_first():
    H = Hypergraph(2, 4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert min_l_degree(H, 1) == (1, (3,))
    H = Hypergraph(2, 4, [(0, 1), (2, 3)])
    assert min_l_degree(H, 1) == (1, (0,))


def test_induced_examples():
    K5 = complete(5, 3)
    for S in itertools.combinations(range(5), 4):
        assert induced(K5, S) == complete(4, 3)
    B = build_B(2, 4, 3, 2)
    assert induced(B, range(B.n)) == B
    assert induced(B, (0, 1)) == edgeless(2, 3)


def test_contains_examples(k4_3):
    assert contains(k4_3, k4_3)
    assert not contains(resolve_named("K4_3_minus_e"), k4_3)
    assert not contains(build_giraud(sylvester_hadamard(4)), complete(5, 4))


def test_family_free_examples(k4_3):
    fam = ForbiddenFamily.of([k4_3])
    assert is_family_free(edgeless(7, 3), fam)
    assert not is_family_free(complete(5, 3), fam)
    # four vertices from four different parts give four E1 triples
    assert not is_family_free(build_B(2, 4, 3, 2), fam)
    with pytest.raises(InvalidArgument):
        is_family_free(complete(4, 2), fam)


def test_count_copies_examples(k4_3):
    assert count_copies(complete(5, 3), k4_3) == 5
    assert count_copies(k4_3, k4_3) == 1
    assert count_copies(complete(6, 3), k4_3) == 15
    assert automorphism_count(k4_3) == 24


def test_canonical_form_examples(k4_3):
    assert canonical_form(P3) != canonical_form(K3)
    forms = {canonical_form(Hypergraph(3, 4, [e for e in k4_3.edges if e != skip])) for skip in k4_3.edges}
    assert len(forms) == 1
    with pytest.raises(UnsupportedSize):
        canonical_form(edgeless(11, 2))


def test_link_family_examples():
    assert link_family(resolve_named("K4_3_minus_e"), 1) == {canonical_form(K3), canonical_form(P3)}
    for t, k, l in [(4, 3, 1), (5, 3, 2), (6, 4, 2), (5, 4, 1)]:
        assert link_family(complete(t, k), l) == {canonical_form(complete(t - l, k - l))}
    single = Hypergraph(4, 4, [(0, 1, 2, 3)])
    assert link_family(single, 2) == {canonical_form(Hypergraph(2, 2, [(0, 1)]))}


def test_forbidden_family_dedups():
    a = Hypergraph(3, 4, [(0, 1, 2), (0, 1, 3)])
    b = Hypergraph(3, 4, [(1, 2, 3), (0, 2, 3)])
    fam = ForbiddenFamily.of([a, b, complete(4, 3)])
    assert len(fam) == 2


def test_blow_up_examples(k4_3):
    assert is_isomorphic(blow_up(k4_3, 1), k4_3)
    single = Hypergraph(3, 3, [(0, 1, 2)])
    assert len(blow_up(single, 3)) == 27
    for s in (1, 2):
        assert contains(blow_up(P3, s), P3)
    with pytest.raises(InvalidArgument):
        blow_up(P3, 0)


# ---------------------------------------------------------------------------
# properties


@given(hypergraphs(), st.data())
def test_handshake(H, data):
    l = data.draw(st.integers(0, H.k))
    total = sum(degree(H, T) for T in itertools.combinations(range(H.n), l))
    assert total == math.comb(H.k, l) * len(H)


@given(hypergraphs(max_n=7), st.data())
def test_degree_lifting(H, data):
    l = data.draw(st.integers(0, H.k - 1))
    lp = data.draw(st.integers(l, H.k - 1))
    T = data.draw(st.lists(st.integers(0, H.n - 1), min_size=l, max_size=l, unique=True))
    lifted = sum(degree(H, tuple(T) + extra)
                 for extra in itertools.combinations([v for v in range(H.n) if v not in T], lp - l))
    assert lifted == degree(H, T) * math.comb(H.k - l, lp - l)


@given(hypergraphs(), st.data())
def test_link_size_is_degree(H, data):
    size = data.draw(st.integers(0, H.k - 1))
    T = data.draw(st.lists(st.integers(0, H.n - 1), min_size=size, max_size=size, unique=True))
    assert len(link(H, T)) == degree(H, T)


@given(hypergraphs(max_n=7), st.data())
def test_canonical_form_relabel_invariant(H, data):
    perm = data.draw(st.permutations(list(range(H.n))))
    assert canonical_form(relabel(H, perm)) == canonical_form(H)


@given(hypergraphs(max_n=5, ks=(2, 3)), st.data())
def test_canonical_form_separates_non_isomorphic(A, data):
    # a relabelled copy, sometimes with one k-set toggled
    perm = data.draw(st.permutations(list(range(A.n))))
    masks = set(relabel(A, perm).edge_masks)
    if data.draw(st.booleans()):
        e = data.draw(st.sampled_from(list(itertools.combinations(range(A.n), A.k))))
        masks ^= {sum(1 << v for v in e)}
    B = Hypergraph.from_masks(A.k, A.n, masks)
    brute = any(relabel(A, p).edge_mask_set == B.edge_mask_set for p in itertools.permutations(range(A.n)))
    assert (canonical_form(A) == canonical_form(B)) == brute


@given(hypergraphs(max_n=6, ks=(2, 3)), hypergraphs(max_n=4, ks=(2, 3)))
def test_injection_count_matches_brute_force(H, F):
    if H.k != F.k or F.n > H.n:
        return
    inj = brute_injections(H, F)
    assert count_injections(H, F) == inj
    assert contains(H, F) == (inj > 0)
    if F.edges:
        assert count_copies(H, F) * automorphism_count(F) == inj


@given(hypergraphs(max_n=8), st.data())
def test_induced_min_degree_bounds(H, data):
    S = data.draw(st.lists(st.integers(0, H.n - 1), min_size=H.k, unique=True))
    l = data.draw(st.integers(0, H.k - 1))
    G = induced(H, S)
    value, _ = min_l_degree(G, l)
    assert 0 <= value <= math.comb(len(S) - l, H.k - l)
