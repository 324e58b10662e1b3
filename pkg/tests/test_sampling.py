from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle_graph, fig1_ids, graphs_with_set, path_graph, star_graph
from xbcentrality.errors import DegenerateSampleSpace
from xbcentrality.exact import all_pairs, betweenness_all, exclusive_betweenness_ie, exclusive_count_matrix
from xbcentrality.oracle import brute_counts, build_path_set
from xbcentrality.sampling import (
    SAMPLERS,
    PairDistribution,
    RunningStats,
    estimate,
    estimate_candidate_family,
    estimate_general,
    estimate_source_sampling,
    expected_value,
    pair_space,
    subsets_up_to,
)
from xbcentrality.spd import enumerate_shortest_paths


@pytest.mark.parametrize("sampler", SAMPLERS)
def test_p3_deterministic(p3, sampler):
    for seed in (0, 1, 99):
        est = estimate(p3, (1,), sampler, T=7, seed=seed)
        assert est.mean == 2.0
        assert est.sample_variance == 0.0


@pytest.mark.parametrize("sampler", SAMPLERS)
def test_p3_single_sample(p3, sampler):
    est = estimate(p3, (1,), sampler, T=1, seed=5)
    assert (est.mean, est.sample_variance, est.samples_T) == (2.0, 0.0, 1)


@pytest.mark.parametrize("sampler", SAMPLERS)
def test_p4_zero(p4, sampler):
    for seed in range(5):
        assert estimate(p4, (1, 2), sampler, T=50, seed=seed).mean == 0.0


def test_star_source_sampling_zero_variance():
    g = star_graph(5)
    est = estimate_source_sampling(g, (0,), T=40, seed=3)
    assert est.mean == 5 * 4 == betweenness_all(g)[0]
    assert est.sample_variance == 0.0


def test_figure1_source_draw_value(fig1):
    a = fig1_ids(fig1, 2, 6, 7)
    (s,) = fig1_ids(fig1, 1)
    rest = fig1.n - len(a)
    assert int(exclusive_count_matrix(fig1, a)[s].sum()) * rest == 7 * rest


def test_c4_pair_count():
    counts = exclusive_count_matrix(cycle_graph(4), (1,))
    assert counts[0, 2] == 1 and counts[2, 0] == 1


@pytest.mark.parametrize("sampler", SAMPLERS)
def test_figure1_exhaustive_expectation(fig1, sampler):
    a = fig1_ids(fig1, 2, 6, 7)
    assert expected_value(fig1, a, sampler) == brute_counts(build_path_set(fig1, a), a).exactly_one


def test_general_custom_distribution_expectation(fig1):
    a = fig1_ids(fig1, 2, 6, 7)
    pairs = pair_space(fig1, a)
    weights = [1 + i + 3 * j for i, j in pairs.tolist()]
    dist = PairDistribution.custom(pairs, weights)
    assert expected_value(fig1, a, "general", dist) == exclusive_betweenness_ie(fig1, a)
    src = PairDistribution.uniform_source(fig1, a)
    assert expected_value(fig1, a, "general", src) == exclusive_betweenness_ie(fig1, a)


def test_uniform_source_probabilities(fig1):
    a = fig1_ids(fig1, 2, 6, 7)
    dist = PairDistribution.uniform_source(fig1, a)
    assert sum(dist.probs) == 1
    by_source: dict[int, Fraction] = {}
    for (i, _), p in zip(dist.pairs.tolist(), dist.probs):
        by_source[i] = by_source.get(i, Fraction(0)) + p
    assert set(by_source.values()) == {Fraction(1, fig1.n - 3)}


def test_distribution_validation():
    with pytest.raises(ValueError):
        PairDistribution("custom", np.array([[0, 1], [1, 0]]), (Fraction(1), Fraction(0)))
    with pytest.raises(ValueError):
        PairDistribution("custom", np.array([[0, 1]]), (Fraction(1, 2),))


def test_degenerate_pair_space():
    g = path_graph(3)
    with pytest.raises(DegenerateSampleSpace):
        estimate(g, (0, 1), "pair", T=5)


def test_general_rejects_pairs_touching_set(fig1):
    a = fig1_ids(fig1, 2, 6, 7)
    dist = PairDistribution.uniform_pair(fig1)  # includes members as endpoints
    with pytest.raises(ValueError):
        estimate_general(fig1, a, dist, T=200, seed=0)


def test_running_stats_matches_numpy():
    rng = np.random.default_rng(0)
    xs = rng.exponential(1e6, size=500)
    rs = RunningStats()
    for x in xs:
        rs.push(x)
    assert rs.mean == pytest.approx(xs.mean(), rel=1e-12)
    assert rs.variance == pytest.approx(xs.var(ddof=1), rel=1e-9)


@pytest.mark.parametrize("sampler", SAMPLERS)
def test_determinism(fig1, sampler):
    a = fig1_ids(fig1, 2, 6, 7)
    assert estimate(fig1, a, sampler, T=300, seed=11) == estimate(fig1, a, sampler, T=300, seed=11)


def test_family_singletons_p3(p3):
    fam = subsets_up_to(range(3), 1)
    ests = estimate_candidate_family(p3, fam, T=2000, seed=0)
    # uniform over all 6 ordered pairs: the two (0,2)-type draws hit vertex 1
    assert [e.mean for e in ests] == [0.0, pytest.approx(2.0, rel=0.15), 0.0]


def test_family_endpoint_condition():
    g = path_graph(3)
    dist = PairDistribution.custom([(1, 2)], [1])
    (est,) = estimate_candidate_family(g, [(1,)], dist, T=10, seed=0)
    assert est.mean == 0.0


def test_family_expectation_exact(fig1):
    fam = subsets_up_to(range(fig1.n), 2)
    dist = PairDistribution.uniform_pair(fig1)
    # each sampled path credits a set with weight |V|(|V|-1) sigma_ij; summing
    # the expectation by hand over all paths must give the exact XB
    dags = all_pairs(fig1).dags
    N = len(dist.pairs)
    for a in fam[::5]:
        total = Fraction(0)
        for i, j in dist.pairs.tolist():
            for path in enumerate_shortest_paths(dags[i], j):
                inner = sum(1 for v in path[1:-1] if v in a)
                if i not in a and j not in a and inner == 1:
                    total += Fraction(1, N) * Fraction(1, dags[i].sigma[j]) * N * dags[i].sigma[j]
        assert total == exclusive_betweenness_ie(fig1, a)


def test_family_convergence_small(fig1):
    fam = [fig1_ids(fig1, 2, 6, 7), fig1_ids(fig1, 5), fig1_ids(fig1, 3, 8)]
    ests = estimate_candidate_family(fig1, fam, T=20000, seed=4)
    for est in ests:
        exact = exclusive_betweenness_ie(fig1, est.target_set)
        assert abs(est.mean - exact) <= 4 * est.std_error + 1e-9


def test_family_empty(fig1):
    with pytest.raises(ValueError):
        estimate_candidate_family(fig1, [], T=5)


def test_subsets_up_to():
    assert subsets_up_to([2, 0, 1], 2) == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]


@settings(max_examples=30, deadline=None)
@given(graphs_with_set(max_n=7, max_k=3), st.sampled_from(SAMPLERS))
def test_exhaustive_unbiasedness(case, sampler):
    g, a = case
    assert expected_value(g, a, sampler) == exclusive_betweenness_ie(g, a)


@settings(max_examples=30, deadline=None)
@given(graphs_with_set(max_n=8, max_k=3), st.sampled_from(SAMPLERS), st.integers(0, 2**31))
def test_nonnegative_and_zero_iff_no_hits(case, sampler, seed):
    g, a = case
    est = estimate(g, a, sampler, T=20, seed=seed)
    assert est.mean >= 0
    if exclusive_betweenness_ie(g, a) == 0:
        assert est.mean == 0
