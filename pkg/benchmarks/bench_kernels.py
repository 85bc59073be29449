"""Time the numba kernels against the numpy/scipy fallback on the same inputs.

    python3 benchmarks/bench_kernels.py [--scale 1.0] [--repeat 3]

Both backends are imported directly, so ``POLYADIC_NO_NUMBA`` has no effect
here. The first numba call per kernel (compilation or cache load) is timed
separately as ``warmup``.
"""
import argparse
import random
import time

import numpy as np

from polyadic import hypergraph_from_relations, sc_from_relations
from polyadic.kernels import numba_impl, numpy_impl
from polyadic.metrics.hypergraph import _distinct


def random_hypergraph(n, m, max_size, seed):
    rng = random.Random(seed)
    rels = [tuple(sorted(rng.sample(range(n), rng.randint(2, max_size)))) for _ in range(m)]
    return hypergraph_from_relations(n, rels)


def boundary_columns(sc, k):
    """Columns of the boundary map from k-faces to (k-1)-faces."""
    faces, lower = sc.k_faces(k), sc.k_faces(k - 1)
    index = {f: i for i, f in enumerate(lower)}
    rows = np.array([index[f[:i] + f[i + 1:]] for f in faces for i in range(k + 1)], dtype=np.int64)
    indptr = np.arange(0, rows.size + 1, k + 1, dtype=np.int64)
    return indptr, rows, len(lower)


def cases(scale):
    hg = random_hypergraph(int(3000 * scale), int(6000 * scale), 6, 1)
    g = hg.two_section
    small = random_hypergraph(int(400 * scale), int(900 * scale), 5, 2)
    distinct = _distinct(small)
    sg = small.two_section
    n_sc = int(200 * scale) + 10
    sc = sc_from_relations(n_sc, random_hypergraph(n_sc, int(1500 * scale), 6, 3).hyperedges)
    cols = boundary_columns(sc, 2)
    return {
        "local_triangles": lambda impl: impl.local_triangles(g.indptr, g.indices),
        "distance_totals": lambda impl: impl.distance_totals(sg.indptr, sg.indices),
        "hyper_clustering": lambda impl: impl.hyper_clustering(small.n, *distinct, sg.indptr, sg.indices),
        "gf2_rank": lambda impl: impl.gf2_rank(*cols),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=float, default=1.0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'kernel':<18}{'warmup':>10}{'numba':>10}{'numpy':>10}{'speedup':>10}  same")
    for name, run in cases(args.scale).items():
        t0 = time.perf_counter()
        run(numba_impl)
        warm = time.perf_counter() - t0
        t_nb, a = best_of(lambda: run(numba_impl), args.repeat)
        t_np, b = best_of(lambda: run(numpy_impl), args.repeat)
        same = np.allclose(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
        print(f"{name:<18}{warm:>10.3f}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>9.1f}x  {same}")


if __name__ == "__main__":
    main()
