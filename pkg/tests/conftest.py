import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hyperturan import Hypergraph

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=8, ks=(1, 2, 3, 4)):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(k, max(k, max_n)))
    pool = list(itertools.combinations(range(n), k))
    chosen = draw(st.lists(st.sampled_from(pool), unique=True, max_size=min(len(pool), 40)))
    return Hypergraph(k, n, chosen)


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


def relabel(H, perm):
    return Hypergraph(H.k, H.n, [tuple(perm[v] for v in e) for e in H.edges])


def brute_injections(H, F):
    """Edge-preserving injections V(F) -> V(H), by trying every one."""
    edges = H.edge_mask_set
    count = 0
    for image in itertools.permutations(range(H.n), F.n):
        if all(sum(1 << image[v] for v in e) in edges for e in F.edges):
            count += 1
    return count


@pytest.fixture
def k4_3():
    return Hypergraph(3, 4, itertools.combinations(range(4), 3))
