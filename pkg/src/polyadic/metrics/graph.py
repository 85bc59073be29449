"""Degree, clustering and path length on simple graphs."""
from __future__ import annotations

import numpy as np

from polyadic import kernels
from polyadic.core import Graph
from polyadic.errors import RelationError


def graph_degree(g: Graph, v: int) -> int:
    return g.degree(v)


def graph_clustering(g: Graph, v: int) -> float:
    """``2 * mu / (k * (k - 1))`` with mu the edges among v's neighbours.

    Nodes of degree below 2 score 0.
    """
    nbrs = g.neighbors(v)
    k = nbrs.size
    if k < 2:
        return 0.0
    inside = set(nbrs.tolist())
    mu = sum(1 for u in nbrs.tolist() for w in g.neighbors(u).tolist() if w > u and w in inside)
    return 2.0 * mu / (k * (k - 1))


def clustering_all(g: Graph) -> np.ndarray:
    """Clustering coefficient of every node, indexed by node id."""
    mu = kernels.local_triangles(g.indptr, g.indices).astype(np.float64)
    k = g.degrees().astype(np.float64)
    denom = k * (k - 1)
    return np.divide(2.0 * mu, denom, out=np.zeros(g.n), where=denom > 0)


def path_length_summary(g: Graph) -> dict[str, float | int]:
    """Mean BFS distance over connected unordered pairs, plus pair counts.

    Pairs in different components are left out rather than treated as
    infinite; ``disconnected_pairs`` says how many were dropped.
    """
    if g.n < 2:
        raise RelationError("average path length needs at least 2 nodes")
    total, pairs = kernels.distance_totals(g.indptr, g.indices)
    if pairs == 0:
        raise RelationError("no pair of nodes is connected")
    return {
        "average_path_length": total / pairs,
        "connected_pairs": pairs,
        "disconnected_pairs": g.n * (g.n - 1) // 2 - pairs,
    }


def average_path_length(g: Graph) -> float:
    return float(path_length_summary(g)["average_path_length"])
