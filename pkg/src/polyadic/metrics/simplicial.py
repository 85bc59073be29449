from __future__ import annotations

import itertools

import numpy as np

from polyadic.core import (
    DEFAULT_FACE_CAP,
    ConcurrenceMatrix,
    SimplicialComplex,
    sc_from_relations,
)
from polyadic.errors import RelationError, ResourceLimitError

ParticipationVector = tuple[int, ...]


def simplex_participation(sc: SimplicialComplex, v: int, max_dim: int | None = None,
                          cap: int = DEFAULT_FACE_CAP) -> ParticipationVector:
    """Entry ``k - 1`` counts the distinct (k-1)-simplices containing ``v``.

    With ``max_dim=None`` the vector stops at the largest simplex holding v.
    """
    containing = sc.simplices_containing(v)
    if max_dim is None:
        max_dim = max((len(s) - 1 for s in containing), default=0)
    counts = [0] * (max_dim + 1)
    if not containing:
        return tuple(counts)
    counts[0] = 1
    others = [tuple(x for x in s if x != v) for s in containing]
    seen = 0
    for size in range(1, max_dim + 1):
        faces = set()
        for rest in others:
            if len(rest) >= size:
                faces.update(itertools.combinations(rest, size))
                if seen + len(faces) > cap:
                    raise ResourceLimitError("simplex participation faces", cap)
        counts[size] = len(faces)
        seen += len(faces)
        if not faces:
            break
    return tuple(counts)


def maximal_simplex_participation(sc: SimplicialComplex, v: int) -> int:
    return len(sc.simplices_containing(v))


def maximal_participation_all(sc: SimplicialComplex) -> np.ndarray:
    members = np.fromiter(itertools.chain.from_iterable(sc.maximal), dtype=np.int64)
    return np.bincount(members, minlength=sc.n)


def dowker_dual(m: ConcurrenceMatrix) -> SimplicialComplex:
    """Swap nodes and relations: one vertex per row of ``m``.

    Each nonzero column becomes the set of rows it touches; all-zero columns
    drop out.
    """
    t = m.transpose()
    if not t.any():
        raise RelationError("Dowker dual of an all-zero matrix is undefined")
    cols = [np.flatnonzero(r).tolist() for r in t if r.any()]
    return sc_from_relations(m.rows, cols)
