import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats

from polyadic.metrics import spearman

samples = st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=3, max_size=40)


def test_endpoints():
    assert spearman([1, 2, 3, 4], [10, 20, 30, 40]).rho == 1.0
    assert spearman([1, 2, 3, 4], [4, 3, 2, 1]).rho == -1.0
    assert spearman([1, 2, 3, 4], [4, 3, 2, 1]).p_value == 0.0


@pytest.mark.parametrize("xs, ys", [([1, 2, 3], [2, 2, 2]), ([1, 2], [1, 2]), ([1, 2, 3], [1, 2])])
def test_errors(xs, ys):
    with pytest.raises(ValueError):
        spearman(xs, ys)


@given(samples)
def test_against_scipy(pairs):
    xs, ys = zip(*pairs)
    if len(set(xs)) < 2 or len(set(ys)) < 2:
        return
    ours = spearman(xs, ys)
    ref = stats.spearmanr(xs, ys)
    assert ours.rho == pytest.approx(ref.statistic, abs=1e-12)
    if abs(ref.statistic) < 1 - 1e-9:
        assert ours.p_value == pytest.approx(ref.pvalue, rel=1e-6, abs=1e-12)
    assert -1 <= ours.rho <= 1 and 0 <= ours.p_value <= 1


@given(samples)
def test_monotone_invariance(pairs):
    xs, ys = zip(*pairs)
    if len(set(xs)) < 2 or len(set(ys)) < 2:
        return
    base = spearman(xs, ys)
    moved = spearman(np.exp(np.array(xs) / 10.0), [3 * y + 7 for y in ys])
    assert moved.rho == pytest.approx(base.rho, abs=1e-12)
