"""The three formalisms: graphs, simplicial complexes and hypergraphs.

All values are immutable once built. Node ids are dense integers
``0..n-1``; text labels live in a :class:`LabelMap` kept alongside.

A relation is a strictly ascending tuple of node ids. Graphs keep their
adjacency in CSR form (``indptr``/``indices``) so the numeric kernels can
consume it directly.
"""
from __future__ import annotations

import itertools
from math import comb
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from polyadic.errors import BoundsError, RelationError, ResourceLimitError

Relation = tuple[int, ...]

DEFAULT_FACE_CAP = 20_000


def relation(members: Iterable[int], n: int | None = None) -> Relation:
    """Normalise ``members`` into a sorted, duplicate-free tuple."""
    rel = tuple(sorted({int(m) for m in members}))
    if not rel:
        raise RelationError("relations must contain at least one node")
    if rel[0] < 0 or (n is not None and rel[-1] >= n):
        bad = rel[0] if rel[0] < 0 else rel[-1]
        raise BoundsError(f"node id {bad} out of range for {n} nodes")
    return rel


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class LabelMap:
    """Bijection between text labels and dense node ids."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.reverse) != len(self.labels):
            raise RelationError("duplicate labels in LabelMap")

    @cached_property
    def reverse(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def lookup(self, label: str) -> int:
        try:
            return self.reverse[label]
        except KeyError:
            raise KeyError(f"unknown label {label!r}") from None

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, i: int) -> str:
        return self.labels[i]

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> LabelMap:
        """Assign ids by first appearance."""
        return cls(tuple(dict.fromkeys(tokens)))

    @classmethod
    def identity(cls, n: int) -> LabelMap:
        return cls(tuple(str(i) for i in range(n)))


# ---------------------------------------------------------------- graphs


def clique_pairs(indptr: np.ndarray, members: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All (u, v) pairs with u < v that share a row of a CSR relation list.

    Rows are grouped by cardinality so each group expands with a single
    fancy-indexing step. Pairs may repeat across rows.
    """
    indptr = np.asarray(indptr, dtype=np.int64)
    members = np.asarray(members, dtype=np.int64)
    sizes = np.diff(indptr)
    us, vs = [], []
    for c in np.unique(sizes):
        if c < 2:
            continue
        rows = np.flatnonzero(sizes == c)
        block = members[indptr[rows][:, None] + np.arange(c)]
        iu, ju = np.triu_indices(c, 1)
        a, b = block[:, iu].ravel(), block[:, ju].ravel()
        us.append(np.minimum(a, b))
        vs.append(np.maximum(a, b))
    if not us:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    return np.concatenate(us), np.concatenate(vs)


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph in CSR form; neighbour lists are sorted."""

    n: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_pairs(cls, n: int, u: Sequence[int], v: Sequence[int]) -> Graph:
        """Build from endpoint arrays; duplicates and self-loops are dropped."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.size and (min(u.min(), v.min()) < 0 or max(u.max(), v.max()) >= n):
            raise BoundsError(f"edge endpoint out of range for {n} nodes")
        keep = u != v
        lo, hi = np.minimum(u[keep], v[keep]), np.maximum(u[keep], v[keep])
        codes = np.unique(lo * n + hi)
        lo, hi = codes // n, codes % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, _readonly(indptr), _readonly(dst.astype(np.int64)))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise BoundsError(f"node {v} out of range for {self.n} nodes")

    def neighbors(self, v: int) -> np.ndarray:
        self._check(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        self._check(v)
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < nb.size and nb[i] == v)

    @property
    def num_edges(self) -> int:
        return int(self.indices.size // 2)

    def edges(self) -> list[tuple[int, int]]:
        src = np.repeat(np.arange(self.n), self.degrees())
        mask = src < self.indices
        return list(zip(src[mask].tolist(), self.indices[mask].tolist()))

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.neighbors(v).tolist()) for v in range(self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"


def graph_from_relations(n: int, rels: Iterable[Iterable[int]]) -> Graph:
    """Graph whose edges are exactly the given (distinct) pairs."""
    us, vs = [], []
    for row, members in enumerate(rels):
        rel = relation(members, n)
        if len(rel) != 2:
            raise RelationError(
                f"row {row}: relation {rel} has {len(rel)} members; graph edges need exactly 2")
        us.append(rel[0])
        vs.append(rel[1])
    return Graph.from_pairs(n, us, vs)


# ---------------------------------------------------- simplicial complexes


def maximal_sets(rels: Iterable[Relation]) -> list[Relation]:
    """Inclusion-maximal members of ``rels``, deduplicated, sorted.

    Sets are visited largest first; each is checked only against already
    kept (strictly larger) sets sharing its rarest node.
    """
    distinct = sorted(set(rels), key=lambda r: (-len(r), r))
    postings: dict[int, list[int]] = {}
    kept: list[frozenset[int]] = []
    out: list[Relation] = []
    for rel in distinct:
        lists = [postings.get(x) for x in rel]
        if all(lists):
            s = frozenset(rel)
            shortest = min(lists, key=len)
            if any(s <= kept[i] for i in shortest):
                continue
        idx = len(kept)
        kept.append(frozenset(rel))
        out.append(rel)
        for x in rel:
            postings.setdefault(x, []).append(idx)
    out.sort()
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored as its antichain of maximal simplices.

    Faces are implicit: any nonempty subset of a stored simplex belongs to
    the complex. ``maximal`` is kept in lexicographic order.
    """

    n: int
    maximal: tuple[Relation, ...]

    @cached_property
    def _postings(self) -> dict[int, list[int]]:
        post: dict[int, list[int]] = {}
        for i, s in enumerate(self.maximal):
            for x in s:
                post.setdefault(x, []).append(i)
        return post

    def simplices_containing(self, v: int) -> list[Relation]:
        if not 0 <= v < self.n:
            raise BoundsError(f"node {v} out of range for {self.n} nodes")
        return [self.maximal[i] for i in self._postings.get(v, ())]

    def contains_face(self, face: Iterable[int]) -> bool:
        face = relation(face, self.n)
        lists = [self._postings.get(x) for x in face]
        if not all(lists):
            return False
        f = set(face)
        return any(f.issubset(self.maximal[i]) for i in min(lists, key=len))

    def k_faces(self, k: int, cap: int = DEFAULT_FACE_CAP) -> list[Relation]:
        """Distinct k-dimensional faces, sorted; raises past ``cap``."""
        if k < 0:
            raise ValueError("dimension must be non-negative")
        faces: set[Relation] = set()
        for s in self.maximal:
            if len(s) <= k:
                continue
            if comb(len(s), k + 1) > cap:
                raise ResourceLimitError(f"{k}-face enumeration", cap)
            faces.update(itertools.combinations(s, k + 1))
            if len(faces) > cap:
                raise ResourceLimitError(f"{k}-face enumeration", cap)
        return sorted(faces)

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.maximal), default=-1)

    def is_antichain(self) -> bool:
        sets = [frozenset(s) for s in self.maximal]
        return all(not (a <= b) for a, b in itertools.permutations(sets, 2))


def sc_from_relations(n: int, rels: Iterable[Iterable[int]]) -> SimplicialComplex:
    normalised = [relation(r, n) for r in rels]
    return SimplicialComplex(n, tuple(maximal_sets(normalised)))


def sc_contains_face(sc: SimplicialComplex, face: Iterable[int]) -> bool:
    return sc.contains_face(face)


def sc_k_faces(sc: SimplicialComplex, k: int, cap: int = DEFAULT_FACE_CAP) -> list[Relation]:
    return sc.k_faces(k, cap)


# ------------------------------------------------------------ hypergraphs


@dataclass(frozen=True)
class Hypergraph:
    """Indexed multiset of hyperedges; repeated node sets keep their own index."""

    n: int
    hyperedges: tuple[Relation, ...]

    def __len__(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, members)`` arrays over the hyperedges in index order."""
        sizes = np.fromiter((len(e) for e in self.hyperedges), dtype=np.int64,
                            count=len(self.hyperedges))
        indptr = np.zeros(len(sizes) + 1, dtype=np.int64)
        np.cumsum(sizes, out=indptr[1:])
        members = np.fromiter(itertools.chain.from_iterable(self.hyperedges),
                              dtype=np.int64, count=int(indptr[-1]))
        return _readonly(indptr), _readonly(members)

    @cached_property
    def incidence(self) -> tuple[np.ndarray, np.ndarray]:
        """Node -> hyperedge-index CSR ``(indptr, edge_ids)``, ids ascending."""
        indptr, members = self.csr
        edge_of = np.repeat(np.arange(len(self.hyperedges)), np.diff(indptr))
        order = np.argsort(members, kind="stable")
        ptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(members, minlength=self.n), out=ptr[1:])
        return _readonly(ptr), _readonly(edge_of[order])

    @cached_property
    def two_section(self) -> Graph:
        u, v = clique_pairs(*self.csr)
        return Graph.from_pairs(self.n, u, v)

    def edges_containing(self, v: int) -> np.ndarray:
        if not 0 <= v < self.n:
            raise BoundsError(f"node {v} out of range for {self.n} nodes")
        ptr, ids = self.incidence
        return ids[ptr[v]:ptr[v + 1]]

    def edge(self, j: int) -> Relation:
        if not 0 <= j < len(self.hyperedges):
            raise BoundsError(f"hyperedge index {j} out of range for {len(self)} hyperedges")
        return self.hyperedges[j]

    @classmethod
    def from_csr(cls, n: int, indptr: np.ndarray, members: np.ndarray) -> Hypergraph:
        """Trusting constructor for arrays whose rows are already normalised."""
        rows = np.split(np.asarray(members), np.asarray(indptr)[1:-1])
        return cls(n, tuple(tuple(r.tolist()) for r in rows))


def hypergraph_from_relations(n: int, rels: Iterable[Iterable[int]],
                              dedup: bool = False) -> Hypergraph:
    edges = [relation(r, n) for r in rels]
    if dedup:
        edges = list(dict.fromkeys(edges))
    return Hypergraph(n, tuple(edges))


# ------------------------------------------------------ concurrence matrix


@dataclass(frozen=True, eq=False)
class ConcurrenceMatrix:
    """Binary relations-by-nodes incidence matrix."""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        e = np.asarray(self.entries)
        if e.ndim != 2 or not np.isin(e, (0, 1)).all():
            raise RelationError("concurrence matrix must be a 2-d binary array")
        if e.shape[0] and not e.any(axis=1).all():
            raise RelationError("every concurrence-matrix row needs a nonzero entry")
        object.__setattr__(self, "entries", _readonly(e.astype(np.uint8)))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def row_sets(self) -> list[Relation]:
        return [tuple(np.flatnonzero(r).tolist()) for r in self.entries]

    def transpose(self) -> np.ndarray:
        return self.entries.T.copy()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConcurrenceMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)


def concurrence_matrix(x: SimplicialComplex | Hypergraph) -> ConcurrenceMatrix:
    rows = x.maximal if isinstance(x, SimplicialComplex) else x.hyperedges
    if not rows:
        raise RelationError("cannot build a concurrence matrix from an empty structure")
    m = np.zeros((len(rows), x.n), dtype=np.uint8)
    for i, r in enumerate(rows):
        m[i, list(r)] = 1
    return ConcurrenceMatrix(m)
