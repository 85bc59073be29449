from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats


@dataclass(frozen=True)
class SpearmanResult:
    rho: float
    p_value: float
    n: int


def spearman(xs: Sequence[float], ys: Sequence[float]) -> SpearmanResult:
    """Spearman rank correlation with a two-sided Student-t p-value.

    Ties get their mean rank.
    """
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"length mismatch: {x.size} vs {y.size}")
    n = x.size
    if n < 3:
        raise ValueError(f"spearman needs at least 3 samples, got {n}")
    rx, ry = stats.rankdata(x), stats.rankdata(y)
    if np.ptp(rx) == 0 or np.ptp(ry) == 0:
        raise ValueError("zero variance: all values tied")
    if np.array_equal(rx, ry):
        return SpearmanResult(1.0, 0.0, n)
    if np.array_equal(rx, n + 1 - ry):
        return SpearmanResult(-1.0, 0.0, n)
    dx, dy = rx - rx.mean(), ry - ry.mean()
    rho = float(np.clip(dx @ dy / np.sqrt((dx @ dx) * (dy @ dy)), -1.0, 1.0))
    if abs(rho) == 1.0:
        return SpearmanResult(rho, 0.0, n)
    t = rho * np.sqrt((n - 2) / (1 - rho * rho))
    p = float(np.clip(2 * stats.t.sf(abs(t), n - 2), 0.0, 1.0))
    return SpearmanResult(rho, p, n)
