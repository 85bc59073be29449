"""Betti numbers over GF(2) from sparse boundary matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from polyadic import kernels
from polyadic.core import DEFAULT_FACE_CAP, Relation, SimplicialComplex


@dataclass(frozen=True)
class BettiReport:
    """Betti numbers and face counts for dimensions ``0..len(betti)-1``.

    ``euler`` is the alternating face-count sum over the reported
    dimensions; it equals the alternating Betti sum whenever the report
    reaches the top dimension of the complex (``complete``).
    """

    betti: tuple[int, ...]
    face_counts: tuple[int, ...]
    euler: int
    complete: bool


def boundary_rank(faces: list[Relation], lower: list[Relation]) -> int:
    """GF(2) rank of the boundary map from ``faces`` onto ``lower``."""
    if not faces or not lower:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    k = len(faces[0])
    rows = np.fromiter(
        (index[f[:i] + f[i + 1:]] for f in faces for i in range(k)),
        dtype=np.int64, count=len(faces) * k)
    indptr = np.arange(0, len(faces) * k + 1, k, dtype=np.int64)
    return kernels.gf2_rank(indptr, rows, len(lower))


def betti_numbers(sc: SimplicialComplex, max_dim: int | None = None,
                  face_cap: int = DEFAULT_FACE_CAP) -> BettiReport:
    top = sc.dimension
    if max_dim is None:
        max_dim = max(top, 0)
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    # faces up to max_dim + 1: the top boundary rank feeds beta[max_dim]
    faces = [sc.k_faces(k, face_cap) if k <= top else [] for k in range(max_dim + 2)]
    ranks = [0] + [boundary_rank(faces[k], faces[k - 1]) for k in range(1, max_dim + 2)]
    counts = tuple(len(f) for f in faces[:max_dim + 1])
    betti = tuple(counts[k] - ranks[k] - ranks[k + 1] for k in range(max_dim + 1))
    euler = sum((-1) ** k * c for k, c in enumerate(counts))
    return BettiReport(betti, counts, euler, complete=max_dim >= top)
