"""Hyperdegree, extra overlap, hypergraph clustering and fill coefficient.

Neighbourhoods come from the 2-section over *all* hyperedges, the two
hyperedges being compared included.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from polyadic import kernels
from polyadic.core import Hypergraph, Relation
from polyadic.errors import BoundsError


def hyperdegree(hg: Hypergraph, v: int) -> int:
    return int(hg.edges_containing(v).size)


def hyperdegrees(hg: Hypergraph) -> np.ndarray:
    return np.diff(hg.incidence[0])


def hyperedge_cardinality(hg: Hypergraph, j: int) -> int:
    return len(hg.edge(j))


def _neighbourhood(hg: Hypergraph, nodes) -> set[int]:
    g = hg.two_section
    out: set[int] = set()
    for x in nodes:
        out.update(g.neighbors(x).tolist())
    return out


def extra_overlap(hg: Hypergraph, j: int, k: int) -> float:
    """Share of the non-common nodes of two hyperedges reachable across them.

    Zero when the two node sets coincide.
    """
    if j == k:
        raise BoundsError("extra overlap needs two distinct hyperedge indices")
    ej, ek = set(hg.edge(j)), set(hg.edge(k))
    d_jk, d_kj = ej - ek, ek - ej
    denom = len(d_jk) + len(d_kj)
    if denom == 0:
        return 0.0
    hits = len(_neighbourhood(hg, d_jk) & d_kj) + len(d_jk & _neighbourhood(hg, d_kj))
    return hits / denom


def hypergraph_clustering(hg: Hypergraph, v: int) -> float:
    incident = hg.edges_containing(v).tolist()
    d = len(incident)
    if d <= 1:
        return 0.0
    total = sum(extra_overlap(hg, a, b)
                for i, a in enumerate(incident) for b in incident[i + 1:])
    return total / (d * (d - 1) / 2)


def _distinct(hg: Hypergraph):
    """Distinct node sets as CSR with multiplicities and node incidence."""
    first: dict[Relation, int] = {}
    mult: list[int] = []
    for e in hg.hyperedges:
        uid = first.setdefault(e, len(first))
        if uid == len(mult):
            mult.append(0)
        mult[uid] += 1
    uniq = Hypergraph(hg.n, tuple(first))
    e_indptr, e_members = uniq.csr
    inc_indptr, inc_ids = uniq.incidence
    return e_indptr, e_members, np.asarray(mult, dtype=np.int64), inc_indptr, inc_ids


def hypergraph_clustering_all(hg: Hypergraph) -> np.ndarray:
    """Clustering of every node; repeated hyperedges are folded into weights."""
    if not hg.hyperedges:
        return np.zeros(hg.n)
    g = hg.two_section
    return kernels.hyper_clustering(hg.n, *_distinct(hg), g.indptr, g.indices)


class _SubsetIndex:
    """Postings over the distinct node sets of size >= 2."""

    def __init__(self, hg: Hypergraph):
        self.sets = sorted({e for e in hg.hyperedges if len(e) > 1})
        self.postings: dict[int, list[int]] = {}
        for i, s in enumerate(self.sets):
            for x in s:
                self.postings.setdefault(x, []).append(i)

    def proper_subsets(self, h: Relation) -> int:
        hs = set(h)
        candidates = set()
        for x in h:
            candidates.update(self.postings.get(x, ()))
        return sum(1 for i in candidates
                   if len(self.sets[i]) < len(h) and hs.issuperset(self.sets[i]))


def _fill(index: _SubsetIndex, h: Relation) -> float:
    size = len(h)
    if size <= 2:
        return 0.0
    return index.proper_subsets(h) / (2 ** size - 2 - size)


def fill_coefficient(hg: Hypergraph, h: int) -> float:
    """Fraction of the possible sub-hyperedges (size >= 2) of ``h`` present.

    Counts distinct node sets, so repeated sub-hyperedges count once.
    """
    return _fill(_SubsetIndex(hg), hg.edge(h))


def fill_coefficients(hg: Hypergraph) -> np.ndarray:
    index = _SubsetIndex(hg)
    cache = lru_cache(maxsize=None)(lambda h: _fill(index, h))
    return np.array([cache(e) for e in hg.hyperedges], dtype=np.float64)
