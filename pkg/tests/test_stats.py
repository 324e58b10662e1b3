import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from scipy import stats as sps

from xbcentrality.errors import UndefinedCorrelation
from xbcentrality.stats import pearson, spearman


def test_identity():
    assert pearson([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0)


def test_reversed():
    assert pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)


def test_monotone_nonlinear():
    x, y = [1, 2, 3, 4], [1, 4, 9, 16]
    assert spearman(x, y) == pytest.approx(1.0)
    assert pearson(x, y) < 1.0


def test_constant_column():
    with pytest.raises(UndefinedCorrelation):
        pearson([1, 1, 1], [1, 2, 3])
    with pytest.raises(UndefinedCorrelation):
        spearman([1, 2, 3], [4, 4, 4])


def test_bad_shapes():
    with pytest.raises(ValueError):
        pearson([1], [1])
    with pytest.raises(ValueError):
        pearson([1, 2], [1, 2, 3])


def test_ties_use_average_ranks():
    x = [1, 2, 2, 3, 5]
    y = [2, 1, 4, 4, 9]
    assert spearman(x, y) == pytest.approx(sps.spearmanr(x, y).statistic, abs=1e-12)


columns = st.lists(st.integers(-1000, 1000), min_size=3, max_size=30)


@given(columns, columns)
def test_matches_scipy(x, y):
    n = min(len(x), len(y))
    x, y = x[:n], y[:n]
    assume(len(set(x)) > 1 and len(set(y)) > 1)
    r = pearson(x, y)
    assert -1.0 <= r <= 1.0
    assert r == pytest.approx(sps.pearsonr(x, y).statistic, abs=1e-9)
    rho = spearman(x, y)
    assert -1.0 <= rho <= 1.0
    assert rho == pytest.approx(sps.spearmanr(x, y).statistic, abs=1e-9)


@given(columns, columns)
def test_spearman_invariant_under_monotone_transform(x, y):
    n = min(len(x), len(y))
    x, y = x[:n], y[:n]
    assume(len(set(x)) > 1 and len(set(y)) > 1)
    warped = [math.copysign(abs(v) ** 3, v) + 7 * v for v in x]
    assert spearman(warped, y) == pytest.approx(spearman(x, y), abs=1e-12)
