import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

_CHUNK = 65536


def gf2_rank(cols_indptr, cols_rows, n_rows):
    cols_indptr = np.asarray(cols_indptr, dtype=np.int64)
    n_cols = cols_indptr.size - 1
    if n_rows == 0 or n_cols == 0:
        return 0
    dense = np.zeros((n_cols, n_rows), dtype=np.uint8)
    owner = np.repeat(np.arange(n_cols), np.diff(cols_indptr))
    np.add.at(dense, (owner, np.asarray(cols_rows, dtype=np.int64)), 1)
    m = np.packbits(dense & 1, axis=1)
    rank = 0
    for j in range(n_rows):
        if rank == m.shape[0]:
            break
        byte, bit = divmod(j, 8)
        col = (m[rank:, byte] >> (7 - bit)) & 1
        hits = np.flatnonzero(col)
        if hits.size == 0:
            continue
        p = rank + hits[0]
        m[[rank, p]] = m[[p, rank]]
        below = rank + 1 + np.flatnonzero((m[rank + 1:, byte] >> (7 - bit)) & 1)
        m[below] ^= m[rank]
        rank += 1
    return rank


def _adjacency(indptr, indices):
    n = len(indptr) - 1
    data = np.ones(len(indices), dtype=np.int64)
    return sparse.csr_matrix((data, np.asarray(indices), np.asarray(indptr)), shape=(n, n))


def local_triangles(indptr, indices):
    a = _adjacency(indptr, indices)
    paths = (a @ a).multiply(a)
    return (np.asarray(paths.sum(axis=1)).ravel() // 2).astype(np.int64)


def distance_totals(indptr, indices):
    a = _adjacency(indptr, indices)
    n = a.shape[0]
    total, pairs = 0, 0
    step = max(1, _CHUNK // max(n, 1))
    for start in range(0, n, step):
        src = np.arange(start, min(n, start + step))
        d = csgraph.shortest_path(a, directed=False, unweighted=True, indices=src)
        upper = np.arange(n)[None, :] > src[:, None]
        ok = upper & np.isfinite(d)
        total += int(d[ok].sum())
        pairs += int(ok.sum())
    return total, pairs


def hyper_clustering(n, e_indptr, e_members, mult, inc_indptr, inc_ids, g_indptr, g_indices):
    e_indptr = np.asarray(e_indptr, dtype=np.int64)
    m = e_indptr.size - 1
    e = sparse.csr_matrix((np.ones(len(e_members), dtype=np.int64), np.asarray(e_members),
                           e_indptr), shape=(m, n))
    adj = _adjacency(g_indptr, g_indices)
    mult = np.asarray(mult, dtype=np.float64)
    inc_indptr = np.asarray(inc_indptr)
    inc_ids = np.asarray(inc_ids)
    out = np.zeros(n, dtype=np.float64)
    for v in range(n):
        ids = inc_ids[inc_indptr[v]:inc_indptr[v + 1]]
        d = mult[ids].sum()
        if d <= 1 or ids.size < 2:
            continue
        iu, ju = np.triu_indices(ids.size, 1)
        total = 0.0
        for s in range(0, iu.size, _CHUNK):
            pa, pb = ids[iu[s:s + _CHUNK]], ids[ju[s:s + _CHUNK]]
            ea, eb = e[pa], e[pb]
            shared = ea.multiply(eb)
            dab, dba = ea - shared, eb - shared
            hits = ((dab @ adj).multiply(dba) > 0).sum(axis=1)
            hits += ((dba @ adj).multiply(dab) > 0).sum(axis=1)
            denom = np.asarray(dab.sum(axis=1) + dba.sum(axis=1), dtype=np.float64).ravel()
            hits = np.asarray(hits, dtype=np.float64).ravel()
            eo = np.divide(hits, denom, out=np.zeros_like(hits), where=denom > 0)
            total += float((eo * mult[pa] * mult[pb]).sum())
        out[v] = total / (d * (d - 1) / 2.0)
    return out
