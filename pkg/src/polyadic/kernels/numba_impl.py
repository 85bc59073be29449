import numpy as np
from numba import njit


@njit(cache=True)
def _gf2_rank(cols_indptr, cols_rows, n_rows):
    n_cols = cols_indptr.size - 1
    n_words = (n_rows + 63) // 64
    mat = np.zeros((n_cols, n_words), dtype=np.uint64)
    for c in range(n_cols):
        for p in range(cols_indptr[c], cols_indptr[c + 1]):
            r = cols_rows[p]
            mat[c, r // 64] ^= np.uint64(1) << np.uint64(r % 64)
    owner = np.full(n_rows, -1, dtype=np.int64)
    rank = 0
    for c in range(n_cols):
        while True:
            low = -1
            for w in range(n_words - 1, -1, -1):
                word = mat[c, w]
                if word != 0:
                    b = 63
                    while (word >> np.uint64(b)) & np.uint64(1) == 0:
                        b -= 1
                    low = w * 64 + b
                    break
            if low < 0:
                break
            o = owner[low]
            if o < 0:
                owner[low] = c
                rank += 1
                break
            for w in range(n_words):
                mat[c, w] ^= mat[o, w]
    return rank


def gf2_rank(cols_indptr, cols_rows, n_rows):
    if n_rows == 0 or len(cols_indptr) <= 1:
        return 0
    return int(_gf2_rank(np.asarray(cols_indptr, dtype=np.int64),
                         np.asarray(cols_rows, dtype=np.int64), int(n_rows)))


@njit(cache=True)
def _local_triangles(indptr, indices):
    n = indptr.size - 1
    mark = np.full(n, -1, dtype=np.int64)
    out = np.zeros(n, dtype=np.int64)
    for v in range(n):
        for p in range(indptr[v], indptr[v + 1]):
            mark[indices[p]] = v
        count = 0
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            for q in range(indptr[u], indptr[u + 1]):
                w = indices[q]
                if w > u and mark[w] == v:
                    count += 1
        out[v] = count
    return out


def local_triangles(indptr, indices):
    return _local_triangles(np.asarray(indptr, dtype=np.int64),
                            np.asarray(indices, dtype=np.int64))


@njit(cache=True)
def _distance_totals(indptr, indices):
    n = indptr.size - 1
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    total = 0
    pairs = 0
    for s in range(n):
        dist[:] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            x = queue[head]
            head += 1
            for p in range(indptr[x], indptr[x + 1]):
                y = indices[p]
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue[tail] = y
                    tail += 1
                    if y > s:
                        total += dist[y]
                        pairs += 1
    return total, pairs


def distance_totals(indptr, indices):
    total, pairs = _distance_totals(np.asarray(indptr, dtype=np.int64),
                                    np.asarray(indices, dtype=np.int64))
    return int(total), int(pairs)


@njit(cache=True)
def _extra_overlap(a, b, e_indptr, e_members, g_indptr, g_indices, in_a, in_b, stamp):
    for p in range(e_indptr[a], e_indptr[a + 1]):
        in_a[e_members[p]] = stamp
    for p in range(e_indptr[b], e_indptr[b + 1]):
        in_b[e_members[p]] = stamp
    size_ab = 0
    hits = 0
    for p in range(e_indptr[a], e_indptr[a + 1]):
        x = e_members[p]
        if in_b[x] == stamp:
            continue
        size_ab += 1
        for q in range(g_indptr[x], g_indptr[x + 1]):
            y = g_indices[q]
            if in_b[y] == stamp and in_a[y] != stamp:
                hits += 1
                break
    size_ba = 0
    for p in range(e_indptr[b], e_indptr[b + 1]):
        x = e_members[p]
        if in_a[x] == stamp:
            continue
        size_ba += 1
        for q in range(g_indptr[x], g_indptr[x + 1]):
            y = g_indices[q]
            if in_a[y] == stamp and in_b[y] != stamp:
                hits += 1
                break
    if size_ab + size_ba == 0:
        return 0.0
    return hits / (size_ab + size_ba)


@njit(cache=True)
def _hyper_clustering(n, e_indptr, e_members, mult, inc_indptr, inc_ids, g_indptr, g_indices):
    out = np.zeros(n, dtype=np.float64)
    in_a = np.zeros(n, dtype=np.int64)
    in_b = np.zeros(n, dtype=np.int64)
    stamp = 0
    for v in range(n):
        lo, hi = inc_indptr[v], inc_indptr[v + 1]
        d = 0
        for p in range(lo, hi):
            d += mult[inc_ids[p]]
        if d <= 1:
            continue
        total = 0.0
        for p in range(lo, hi):
            a = inc_ids[p]
            for q in range(p + 1, hi):
                b = inc_ids[q]
                stamp += 1
                eo = _extra_overlap(a, b, e_indptr, e_members, g_indptr, g_indices,
                                    in_a, in_b, stamp)
                total += eo * mult[a] * mult[b]
        out[v] = total / (d * (d - 1) / 2.0)
    return out


def hyper_clustering(n, e_indptr, e_members, mult, inc_indptr, inc_ids, g_indptr, g_indices):
    i64 = np.int64
    return _hyper_clustering(
        int(n), np.asarray(e_indptr, dtype=i64), np.asarray(e_members, dtype=i64),
        np.asarray(mult, dtype=i64), np.asarray(inc_indptr, dtype=i64),
        np.asarray(inc_ids, dtype=i64), np.asarray(g_indptr, dtype=i64),
        np.asarray(g_indices, dtype=i64))
