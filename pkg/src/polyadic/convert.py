"""Moves between graphs, simplicial complexes and hypergraphs.

Going down (hypergraph -> complex -> graph) forgets relations; going up
(graph -> complex -> hypergraph) assumes them. Node count ``n`` is carried
through every conversion, so isolated nodes survive.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from polyadic.core import (
    DEFAULT_FACE_CAP,
    Graph,
    Hypergraph,
    Relation,
    SimplicialComplex,
    clique_pairs,
    maximal_sets,
)
from polyadic.errors import ResourceLimitError

DEFAULT_CLIQUE_CAP = 1_000_000


@dataclass(frozen=True)
class MaximalOnly:
    """One hyperedge per maximal simplex."""


@dataclass(frozen=True)
class AllFaces:
    """One hyperedge per distinct face of dimension 1..max_dimension.

    Vertices (dimension 0) never become hyperedges.
    """

    max_dimension: int
    cap: int = DEFAULT_FACE_CAP


SimplicialToHypergraphMode = MaximalOnly | AllFaces


def hypergraph_to_simplicial(hg: Hypergraph) -> SimplicialComplex:
    return SimplicialComplex(hg.n, tuple(maximal_sets(hg.hyperedges)))


def _csr(rels: tuple[Relation, ...]) -> tuple[np.ndarray, np.ndarray]:
    sizes = np.fromiter((len(r) for r in rels), dtype=np.int64, count=len(rels))
    indptr = np.zeros(len(rels) + 1, dtype=np.int64)
    np.cumsum(sizes, out=indptr[1:])
    members = np.fromiter(itertools.chain.from_iterable(rels), dtype=np.int64,
                          count=int(indptr[-1]))
    return indptr, members


def simplicial_to_graph(sc: SimplicialComplex) -> Graph:
    u, v = clique_pairs(*_csr(sc.maximal))
    return Graph.from_pairs(sc.n, u, v)


def hypergraph_to_graph(hg: Hypergraph) -> Graph:
    """The 2-section: u ~ v iff some hyperedge holds both."""
    return hg.two_section


def maximal_cliques(g: Graph, cap: int = DEFAULT_CLIQUE_CAP) -> list[Relation]:
    """Bron-Kerbosch with Tomita pivoting, sorted output.

    Isolated nodes come back as singleton cliques.
    """
    adj = [frozenset(g.neighbors(v).tolist()) for v in range(g.n)]
    found: list[Relation] = []
    # explicit stack of (clique, candidates, excluded)
    stack = [((), set(range(g.n)), set())]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                found.append(tuple(sorted(r)))
                if len(found) > cap:
                    raise ResourceLimitError("maximal clique enumeration", cap)
            continue
        pivot = max(itertools.chain(p, x), key=lambda u: len(p & adj[u]))
        for v in list(p - adj[pivot]):
            stack.append((r + (v,), p & adj[v], x & adj[v]))
            p.remove(v)
            x.add(v)
    found.sort()
    return found


def graph_to_clique_complex(g: Graph, max_clique_cap: int = DEFAULT_CLIQUE_CAP) -> SimplicialComplex:
    return SimplicialComplex(g.n, tuple(maximal_cliques(g, max_clique_cap)))


def simplicial_to_hypergraph(sc: SimplicialComplex,
                             mode: SimplicialToHypergraphMode = MaximalOnly()) -> Hypergraph:
    if isinstance(mode, MaximalOnly):
        return Hypergraph(sc.n, tuple(sc.maximal))
    edges: list[Relation] = []
    for k in range(1, min(mode.max_dimension, sc.dimension) + 1):
        edges.extend(sc.k_faces(k, cap=mode.cap - len(edges)))
    return Hypergraph(sc.n, tuple(edges))


def graph_to_hypergraph(g: Graph, max_clique_cap: int = DEFAULT_CLIQUE_CAP) -> Hypergraph:
    """Clique complex, then one hyperedge per maximal clique."""
    return simplicial_to_hypergraph(graph_to_clique_complex(g, max_clique_cap), MaximalOnly())
