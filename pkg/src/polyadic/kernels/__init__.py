"""Hot inner loops, with a numba path and a numpy/scipy fallback.

Set ``POLYADIC_NO_NUMBA=1`` to force the fallback. The numba path is also
skipped when numba cannot be imported. Both paths share signatures:

``gf2_rank(cols_indptr, cols_rows, n_rows)``
    rank over GF(2) of a sparse 0/1 matrix given column-wise.
``local_triangles(indptr, indices)``
    per node, the number of edges among its neighbours.
``distance_totals(indptr, indices)``
    ``(sum, count)`` of shortest-path lengths over reachable unordered pairs.
``hyper_clustering(n, e_indptr, e_members, mult, inc_indptr, inc_ids, g_indptr, g_indices)``
    per-node hypergraph clustering over distinct hyperedges with multiplicities.
"""
import os

from polyadic.kernels import numpy_impl

BACKEND = "numpy"
_impl = numpy_impl

if os.environ.get("POLYADIC_NO_NUMBA", "").lower() not in ("1", "true", "yes"):
    try:
        from polyadic.kernels import numba_impl
    except ImportError:  # pragma: no cover - numba missing
        pass
    else:
        _impl = numba_impl
        BACKEND = "numba"

gf2_rank = _impl.gf2_rank
local_triangles = _impl.local_triangles
distance_totals = _impl.distance_totals
hyper_clustering = _impl.hyper_clustering

__all__ = ["BACKEND", "gf2_rank", "local_triangles", "distance_totals", "hyper_clustering"]
