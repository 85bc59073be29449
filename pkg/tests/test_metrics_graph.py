import random

import networkx as nx
import pytest

from polyadic import RelationError, graph_from_relations
from polyadic.metrics import (
    average_path_length,
    clustering_all,
    graph_clustering,
    graph_degree,
    path_length_summary,
)

import oracles
from conftest import random_edges


def star(k):
    return graph_from_relations(k + 1, [(0, i) for i in range(1, k + 1)])


def test_degree(toy_graph):
    assert graph_degree(toy_graph, 1) == 3 and graph_degree(toy_graph, 2) == 3
    assert graph_degree(graph_from_relations(3, []), 1) == 0
    assert graph_degree(star(4), 0) == 4


def test_clustering_examples(toy_graph):
    tri = graph_from_relations(3, [(0, 1), (1, 2), (0, 2)])
    assert [graph_clustering(tri, v) for v in range(3)] == [1.0, 1.0, 1.0]
    assert graph_clustering(star(4), 0) == 0.0
    assert graph_clustering(toy_graph, 1) == pytest.approx(2 / 3, abs=1e-15)


@pytest.mark.parametrize("seed", range(25))
def test_clustering_against_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 25)
    edges = random_edges(rng, n, rng.random())
    g = graph_from_relations(n, edges)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(edges)
    ref = nx.clustering(nxg)
    vec = clustering_all(g)
    for v in range(n):
        assert graph_clustering(g, v) == pytest.approx(ref[v], abs=1e-12)
        assert vec[v] == pytest.approx(ref[v], abs=1e-12)
        assert 0.0 <= vec[v] <= 1.0
    assert g.degrees().sum() == 2 * len(edges)


def test_path_length_examples():
    assert average_path_length(graph_from_relations(3, [(0, 1), (1, 2)])) == pytest.approx(4 / 3)
    k4 = graph_from_relations(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert average_path_length(k4) == 1.0
    two = graph_from_relations(4, [(0, 1), (2, 3)])
    assert average_path_length(two) == 1.0
    assert path_length_summary(two)["disconnected_pairs"] == 4


def test_path_length_errors():
    with pytest.raises(RelationError):
        average_path_length(graph_from_relations(1, []))
    with pytest.raises(RelationError):
        average_path_length(graph_from_relations(3, []))


@pytest.mark.parametrize("seed", range(15))
def test_path_length_against_bfs(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 20)
    edges = random_edges(rng, n, 0.25) + [(0, 1)]
    total, pairs = oracles.bfs_mean_distance(n, edges)
    assert average_path_length(graph_from_relations(n, edges)) == pytest.approx(total / pairs, abs=1e-12)
