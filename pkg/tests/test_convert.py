import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyadic import (
    ResourceLimitError,
    graph_from_relations,
    hypergraph_from_relations,
    sc_from_relations,
)
from polyadic.convert import (
    AllFaces,
    MaximalOnly,
    graph_to_clique_complex,
    graph_to_hypergraph,
    hypergraph_to_graph,
    hypergraph_to_simplicial,
    maximal_cliques,
    simplicial_to_graph,
    simplicial_to_hypergraph,
)

from conftest import TOY_EDGES, TOY_MAXIMAL, TOY_PAPERS, random_edges


def round_trip(g):
    sc = graph_to_clique_complex(g)
    return simplicial_to_graph(hypergraph_to_simplicial(simplicial_to_hypergraph(sc, MaximalOnly())))


hypergraphs = st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.frozensets(st.integers(0, n - 1), min_size=1, max_size=5), max_size=12)))


class TestHypergraphToSimplicial:
    def test_toy(self, toy_hg):
        assert hypergraph_to_simplicial(toy_hg).maximal == TOY_MAXIMAL

    def test_single(self):
        hg = hypergraph_from_relations(3, [(0, 1, 2)])
        assert hypergraph_to_simplicial(hg).maximal == ((0, 1, 2),)

    def test_forgets_duplicates_and_dominated(self):
        hg = hypergraph_from_relations(3, [(0, 1), (0, 1, 2), (0, 1, 2)])
        assert hypergraph_to_simplicial(hg).maximal == ((0, 1, 2),)


class TestSimplicialToGraph:
    def test_toy(self, toy_sc):
        assert simplicial_to_graph(toy_sc).edges() == TOY_EDGES

    def test_triangle(self):
        g = simplicial_to_graph(sc_from_relations(3, [(0, 1, 2)]))
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_singleton_keeps_node(self):
        g = simplicial_to_graph(sc_from_relations(1, [(0,)]))
        assert g.n == 1 and g.num_edges == 0


class TestCliqueComplex:
    def test_toy(self, toy_graph):
        assert graph_to_clique_complex(toy_graph).maximal == ((0, 1, 2), (1, 2, 3))

    def test_triangle(self):
        g = graph_from_relations(3, [(0, 1), (1, 2), (0, 2)])
        assert graph_to_clique_complex(g).maximal == ((0, 1, 2),)

    def test_path(self):
        g = graph_from_relations(3, [(0, 1), (1, 2)])
        assert graph_to_clique_complex(g).maximal == ((0, 1), (1, 2))

    def test_cap(self):
        # complement of a perfect matching on 2k nodes has 2^k maximal cliques
        k = 6
        edges = [(u, v) for u in range(2 * k) for v in range(u + 1, 2 * k) if not (u % 2 == 0 and v == u + 1)]
        g = graph_from_relations(2 * k, edges)
        assert len(maximal_cliques(g)) == 2 ** k
        with pytest.raises(ResourceLimitError):
            graph_to_clique_complex(g, max_clique_cap=2 ** k - 1)

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_networkx(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 14)
        edges = random_edges(rng, n, rng.choice([0.2, 0.5, 0.8]))
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(edges)
        expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(nxg))
        assert list(maximal_cliques(graph_from_relations(n, edges))) == expected

    @pytest.mark.parametrize("seed", range(20))
    def test_soundness(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 12)
        g = graph_from_relations(n, random_edges(rng, n, 0.5))
        for s in graph_to_clique_complex(g).maximal:
            assert all(g.has_edge(u, v) for i, u in enumerate(s) for v in s[i + 1:])
            for w in set(range(n)) - set(s):
                assert not all(g.has_edge(w, u) for u in s)


class TestSimplicialToHypergraph:
    def test_toy_maximal_only(self, toy_sc, toy_hg):
        hg = simplicial_to_hypergraph(toy_sc, MaximalOnly())
        assert hg.hyperedges == TOY_MAXIMAL
        assert hg != toy_hg

    def test_all_faces(self):
        sc = sc_from_relations(3, [(0, 1, 2)])
        hg = simplicial_to_hypergraph(sc, AllFaces(max_dimension=2))
        assert set(hg.hyperedges) == {(0, 1), (0, 2), (1, 2), (0, 1, 2)}
        assert len(hg) == 4

    def test_all_faces_excludes_vertices(self):
        sc = sc_from_relations(3, [(0, 1), (2,)])
        assert simplicial_to_hypergraph(sc, AllFaces(3)).hyperedges == ((0, 1),)

    def test_all_faces_cap(self):
        sc = sc_from_relations(8, [tuple(range(8))])
        with pytest.raises(ResourceLimitError):
            simplicial_to_hypergraph(sc, AllFaces(7, cap=100))
        assert len(simplicial_to_hypergraph(sc, AllFaces(7, cap=247))) == 2 ** 8 - 1 - 8

    def test_edge(self):
        sc = sc_from_relations(2, [(0, 1)])
        assert simplicial_to_hypergraph(sc).hyperedges == ((0, 1),)


class TestHypergraphToGraph:
    def test_toy_commutes(self, toy_hg, toy_sc):
        assert hypergraph_to_graph(toy_hg) == simplicial_to_graph(toy_sc)
        assert hypergraph_to_graph(toy_hg).edges() == TOY_EDGES

    def test_triangle(self):
        g = hypergraph_to_graph(hypergraph_from_relations(3, [(0, 1, 2)]))
        assert g.num_edges == 3

    def test_singletons(self):
        g = hypergraph_to_graph(hypergraph_from_relations(2, [(0,), (1,)]))
        assert g.n == 2 and g.num_edges == 0

    @given(hypergraphs)
    def test_commutation_and_monotone_loss(self, data):
        n, rels = data
        hg = hypergraph_from_relations(n, rels)
        sc = hypergraph_to_simplicial(hg)
        assert hypergraph_to_graph(hg) == simplicial_to_graph(sc)
        assert len(sc.maximal) <= len(set(hg.hyperedges))


class TestRoundTrips:
    @pytest.mark.parametrize("seed", range(60))
    def test_graph_round_trip(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 12)
        g = graph_from_relations(n, random_edges(rng, n, rng.choice([0.2, 0.5, 0.8])))
        assert round_trip(g) == g

    def test_hypergraph_round_trip_is_lossy(self, toy_hg):
        back = simplicial_to_hypergraph(hypergraph_to_simplicial(toy_hg), MaximalOnly())
        assert len(back) == 3 and back != toy_hg

    def test_graph_to_hypergraph(self, toy_graph):
        assert graph_to_hypergraph(toy_graph).hyperedges == ((0, 1, 2), (1, 2, 3))

    def test_isolated_nodes_survive(self):
        g = graph_from_relations(5, [(0, 1)])
        sc = graph_to_clique_complex(g)
        assert sc.maximal == ((0, 1), (2,), (3,), (4,))
        assert round_trip(g) == g
