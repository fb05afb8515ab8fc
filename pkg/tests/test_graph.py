import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from fatcolor.graph import (
    Graph,
    GraphError,
    SearchSizeError,
    clique_number,
    count_neighbors_in,
    degree,
    hom_equivalence_certificate,
    homomorphism_exists,
    induced_subgraph,
    is_regular,
    maximum_clique,
)
from oracles import brute_clique_number, brute_homomorphisms, has_proper_coloring


K3, K4, K5 = Graph.complete(3), Graph.complete(4), Graph.complete(5)
C4, C5 = Graph.cycle(4), Graph.cycle(5)


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph(2, ((0,), ()))

    def test_rejects_asymmetry(self):
        with pytest.raises(GraphError):
            Graph(2, ((1,), ()))

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Graph(2, ((2,), ()))

    def test_rejects_empty(self):
        with pytest.raises(GraphError):
            Graph(0, ())
        with pytest.raises(GraphError):
            Graph.from_edges(0, [])

    def test_from_edges_sorted_and_symmetric(self):
        g = Graph.from_edges(4, [(3, 0), (0, 1), (2, 1)])
        assert g.adjacency == ((1, 3), (0, 2), (1,), (0,))
        assert list(g.edges()) == [(0, 1), (0, 3), (1, 2)]
        assert g.size == 3 and g.order == 4

    @given(graphs(max_n=12))
    def test_handshake(self, g):
        assert sum(degree(g, v) for v in range(g.order)) == 2 * g.size
        for v in range(g.order):
            assert v not in g.neighbors(v)
            for u in g.neighbors(v):
                assert g.has_edge(u, v)


def test_degree_examples():
    assert {degree(K4, v) for v in range(4)} == {3}
    assert {degree(Graph.empty(3), v) for v in range(3)} == {0}
    assert {degree(C5, v) for v in range(5)} == {2}
    with pytest.raises(GraphError):
        degree(K4, 4)


def test_count_neighbors_in_examples():
    assert count_neighbors_in(K3, 0, {1, 2}) == 2
    assert count_neighbors_in(K3, 0, {0}) == 0
    # C_4 is 0-1-2-3-0: vertex 0 is adjacent to 1 and 3.
    assert C4.adjacency[0] == (1, 3)
    assert count_neighbors_in(C4, 0, {1, 3}) == 2
    with pytest.raises(GraphError):
        count_neighbors_in(K3, 0, {5})


def test_is_regular_examples():
    assert is_regular(C5) == 2
    assert is_regular(Graph.path(3)) is None
    assert is_regular(Graph.empty(4)) == 0


def test_induced_subgraph_examples():
    assert induced_subgraph(K4, {0, 2, 3}) == K3
    assert induced_subgraph(C5, {1, 2}) == Graph.complete(2)
    assert induced_subgraph(C5, {1, 3}) == Graph.empty(2)
    with pytest.raises(GraphError):
        induced_subgraph(K4, set())


def test_clique_examples(backend):
    for g, omega in [(K5, 5), (C5, 2), (Graph.empty(3), 1), (Graph.complete(1), 1)]:
        offsets, nbrs = g.csr
        assert len(backend.max_clique(g.order, offsets, nbrs)) == omega
    assert clique_number(K5) == 5 and clique_number(C5) == 2


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_clique_matches_subset_enumeration(g):
    assert clique_number(g) == brute_clique_number(g.adjacency)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_maximum_clique_is_a_clique(g):
    c = maximum_clique(g)
    assert all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))


@pytest.mark.parametrize("n, p", [(30, 0.5), (60, 0.3), (80, 0.6), (130, 0.2)])
def test_clique_backends_agree_with_networkx(backend, n, p):
    rng = random.Random(n * 1000 + int(p * 100))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    g = Graph.from_edges(n, edges)
    ref = nx.Graph()
    ref.add_nodes_from(range(n))
    ref.add_edges_from(edges)
    expected = max(len(c) for c in nx.find_cliques(ref))
    offsets, nbrs = g.csr
    clique = backend.max_clique(n, offsets, nbrs)
    assert len(clique) == expected
    assert all(g.has_edge(u, v) for u, v in itertools.combinations(clique, 2))


class TestHomomorphism:
    def test_examples(self):
        assert homomorphism_exists(Graph.complete(2), K3) == (0, 1)
        assert homomorphism_exists(K3, Graph.complete(2)) is None
        assert homomorphism_exists(C5, C5) == (0, 1, 2, 3, 4)

    def test_size_guard(self):
        with pytest.raises(SearchSizeError, match="clique"):
            homomorphism_exists(Graph.cycle(11), K3)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=8), st.integers(min_value=1, max_value=3))
    def test_hom_to_complete_iff_proper_coloring(self, g, colors):
        mapping = homomorphism_exists(g, Graph.complete(colors))
        assert (mapping is not None) == has_proper_coloring(g.adjacency, colors)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=5), graphs(max_n=4))
    def test_lexicographically_least(self, g, h):
        homs = brute_homomorphisms(g.adjacency, h.adjacency)
        got = homomorphism_exists(g, h)
        assert got == (homs[0] if homs else None)


class TestCertificate:
    def test_examples(self):
        assert hom_equivalence_certificate(K3, K3).status == "inconclusive"
        cert = hom_equivalence_certificate(K3, C5)
        assert cert.status == "not-equivalent" and (cert.omega_g, cert.omega_h) == (3, 2)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=5), graphs(max_n=5))
    def test_never_contradicts_two_way_homomorphism(self, g, h):
        cert = hom_equivalence_certificate(g, h)
        both = homomorphism_exists(g, h) is not None and homomorphism_exists(h, g) is not None
        if both:
            assert cert.status == "inconclusive"
        assert cert.status in {"inconclusive", "not-equivalent"}
