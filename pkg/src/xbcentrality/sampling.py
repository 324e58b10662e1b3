"""Monte Carlo estimators of exclusive betweenness.

Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), consumed
sequentially by a single estimator call. The same seed, graph, set, sampler
and sample count always reproduce the same estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateSampleSpace, InvalidVertexSetError
from .exact import all_pairs, exclusive_count_matrix
from .graph import Graph, VertexSet
from .spd import enumerate_shortest_paths, path_probability, sample_shortest_path

SAMPLERS = ("general", "source", "pair", "path")


@dataclass(frozen=True)
class SampleEstimate:
    mean: float
    sample_variance: float
    samples_T: int
    seed: int
    target_set: VertexSet
    sampler: str = "general"

    @property
    def std_error(self) -> float:
        return math.sqrt(self.sample_variance / self.samples_T)


class RunningStats:
    """Welford's one-pass mean and variance; works elementwise on arrays."""

    def __init__(self, shape: tuple[int, ...] = ()):
        self.count = 0
        self.mean = np.zeros(shape)
        self.m2 = np.zeros(shape)

    def push(self, x) -> None:
        self.count += 1
        delta = x - self.mean
        self.mean = self.mean + delta / self.count
        self.m2 = self.m2 + delta * (x - self.mean)

    @property
    def variance(self):
        if self.count < 2:
            return np.zeros_like(self.m2)
        return self.m2 / (self.count - 1)


@dataclass(frozen=True)
class PairDistribution:
    """Probability of each ordered pair ``pairs[k]``, stored exactly.

    ``kind`` is ``"uniform-pair"``, ``"uniform-source"`` (uniform source, then
    a target with probability proportional to its number of shortest paths,
    so the drawn path is uniform among all paths leaving the source) or
    ``"custom"``.
    """

    kind: str
    pairs: np.ndarray  # shape (N, 2)
    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.pairs) == 0:
            raise DegenerateSampleSpace("pair space is empty")
        if any(p <= 0 for p in self.probs):
            raise ValueError("every pair needs positive probability")
        if sum(self.probs) != 1:
            raise ValueError("pair probabilities must sum to 1")

    @property
    def cumulative(self) -> np.ndarray:
        c = np.cumsum([float(p) for p in self.probs])
        c[-1] = 1.0
        return c

    def draw(self, rng: np.random.Generator, size: int | None = None):
        idx = np.searchsorted(self.cumulative, rng.random(size), side="right")
        return np.minimum(idx, len(self.pairs) - 1)

    @classmethod
    def custom(cls, pairs: Sequence[tuple[int, int]], weights: Sequence) -> PairDistribution:
        w = [Fraction(x) for x in weights]
        total = sum(w)
        return cls("custom", np.asarray(pairs, dtype=np.int64).reshape(-1, 2), tuple(x / total for x in w))

    @classmethod
    def uniform_pair(cls, g: Graph, a: Iterable[int] = ()) -> PairDistribution:
        pairs = pair_space(g, a)
        p = Fraction(1, len(pairs))
        return cls("uniform-pair", pairs, (p,) * len(pairs))

    @classmethod
    def uniform_source(cls, g: Graph, a: Iterable[int] = ()) -> PairDistribution:
        pairs = pair_space(g, a)
        S = all_pairs(g).sigma
        counts = [(i, int(S[i, j])) for i, j in pairs.tolist()]
        mass: dict[int, int] = {}
        for i, c in counts:
            mass[i] = mass.get(i, 0) + c
        probs = tuple(Fraction(c, len(mass) * mass[i]) for i, c in counts)
        return cls("uniform-source", pairs, probs)


def pair_space(g: Graph, a: Iterable[int] = ()) -> np.ndarray:
    """Ordered pairs ``(i, j)``, ``i != j``, both outside ``a``."""
    rest = [v for v in range(g.n) if v not in set(a)]
    if len(rest) < 2:
        raise DegenerateSampleSpace(f"only {len(rest)} vertex outside the target set")
    return np.array([(i, j) for i in rest for j in rest if i != j], dtype=np.int64).reshape(-1, 2)


def exactly_one_internal(path: Sequence[int], members: frozenset[int]) -> bool:
    return sum(1 for v in path[1:-1] if v in members) == 1


def path_beta(p_pair, q_path, path: Sequence[int], members: frozenset[int]):
    """Per-sample value ``1 / (p_ij q_k)`` if exactly one member is internal, else 0."""
    if exactly_one_internal(path, members):
        return 1 / (p_pair * q_path)
    return 0 * p_pair


def _check(g: Graph, a: Iterable[int], T: int) -> VertexSet:
    a = g.vertex_set(a)
    if T < 1:
        raise ValueError("need at least one sample")
    if g.n - len(a) < 2:
        raise DegenerateSampleSpace("fewer than two vertices outside the target set")
    return a


def estimate_general(
    g: Graph,
    a: Iterable[int],
    dist: PairDistribution | None = None,
    T: int = 1000,
    seed: int = 0,
    *,
    sampler: str = "general",
) -> SampleEstimate:
    """Draw a pair from ``dist``, then a uniform shortest path between them."""
    a = _check(g, a, T)
    dist = dist or PairDistribution.uniform_pair(g, a)
    members = frozenset(a)
    dags = all_pairs(g).dags
    rng = np.random.default_rng(seed)
    probs = [float(p) for p in dist.probs]
    stats = RunningStats()
    for k in dist.draw(rng, T):
        i, j = int(dist.pairs[k, 0]), int(dist.pairs[k, 1])
        if i in members or j in members:
            raise InvalidVertexSetError(f"pair ({i}, {j}) has an endpoint in the target set")
        dag = dags[i]
        path = sample_shortest_path(dag, j, rng)
        stats.push(float(path_beta(probs[k], 1.0 / dag.sigma[j], path, members)))
    return SampleEstimate(float(stats.mean), float(stats.variance), T, seed, a, sampler)


def estimate_path_sampling(g: Graph, a: Iterable[int], T: int = 1000, seed: int = 0) -> SampleEstimate:
    """Uniform ordered pair, then one uniform shortest path; weight ``|N| sigma_ij``."""
    a = _check(g, a, T)
    return estimate_general(g, a, PairDistribution.uniform_pair(g, a), T, seed, sampler="path")


def estimate_source_sampling(g: Graph, a: Iterable[int], T: int = 1000, seed: int = 0) -> SampleEstimate:
    """Uniform source; its exactly-one paths are counted exactly and scaled by ``|V - A|``."""
    a = _check(g, a, T)
    rest = np.array([v for v in range(g.n) if v not in set(a)])
    per_source = exclusive_count_matrix(g, a).sum(axis=1, dtype=np.float64)
    rng = np.random.default_rng(seed)
    draws = rest[rng.integers(0, len(rest), size=T)]
    return _from_values(per_source[draws] * len(rest), seed, a, "source")


def estimate_pair_sampling(g: Graph, a: Iterable[int], T: int = 1000, seed: int = 0) -> SampleEstimate:
    """Uniform ordered pair; its exactly-one paths are counted exactly and scaled by ``|N|``."""
    a = _check(g, a, T)
    pairs = pair_space(g, a)
    counts = exclusive_count_matrix(g, a).astype(np.float64)
    rng = np.random.default_rng(seed)
    k = rng.integers(0, len(pairs), size=T)
    values = counts[pairs[k, 0], pairs[k, 1]] * len(pairs)
    return _from_values(values, seed, a, "pair")


def _from_values(values: np.ndarray, seed: int, a: VertexSet, sampler: str) -> SampleEstimate:
    T = len(values)
    var = float(np.var(values, ddof=1)) if T > 1 else 0.0
    return SampleEstimate(float(np.mean(values)), var, T, seed, a, sampler)


def estimate(g: Graph, a: Iterable[int], sampler: str, T: int, seed: int = 0) -> SampleEstimate:
    if sampler == "general":
        return estimate_general(g, a, None, T, seed)
    if sampler == "source":
        return estimate_source_sampling(g, a, T, seed)
    if sampler == "pair":
        return estimate_pair_sampling(g, a, T, seed)
    if sampler == "path":
        return estimate_path_sampling(g, a, T, seed)
    raise ValueError(f"unknown sampler {sampler!r}; expected one of {SAMPLERS}")


def expected_value(
    g: Graph,
    a: Iterable[int],
    sampler: str,
    dist: PairDistribution | None = None,
) -> Fraction:
    """Exact expectation of one sample, summed over the whole sample space.

    Uses the same per-sample values and the same draw probabilities the
    estimators use (for path draws, the exact probability of the weighted
    backward walk). Intended for small graphs.
    """
    a = g.vertex_set(a)
    members = frozenset(a)
    if sampler in ("general", "path"):
        if sampler == "path" or dist is None:
            dist = PairDistribution.uniform_pair(g, a)
        dags = all_pairs(g).dags
        total = Fraction(0)
        for (i, j), p in zip(dist.pairs.tolist(), dist.probs):
            dag = dags[i]
            for path in enumerate_shortest_paths(dag, j):
                q = path_probability(dag, path)
                total += p * q * path_beta(p, q, path, members)
        return total
    counts = exclusive_count_matrix(g, a)
    if sampler == "source":
        rest = [v for v in range(g.n) if v not in members]
        p = Fraction(1, len(rest))
        return sum((p * (int(counts[i].sum()) / p) for i in rest), Fraction(0))
    if sampler == "pair":
        pairs = pair_space(g, a)
        p = Fraction(1, len(pairs))
        return sum((p * (int(counts[i, j]) / p) for i, j in pairs.tolist()), Fraction(0))
    raise ValueError(f"unknown sampler {sampler!r}")


# ---------------------------------------------------------------- candidate families


def subsets_up_to(pool: Iterable[int], k: int) -> list[VertexSet]:
    """All non-empty subsets of ``pool`` with at most ``k`` members."""
    pool = sorted(set(pool))
    return [c for r in range(1, k + 1) for c in combinations(pool, r)]


def estimate_candidate_family(
    g: Graph,
    family: Sequence[Iterable[int]],
    dist: PairDistribution | None = None,
    T: int = 1000,
    seed: int = 0,
) -> list[SampleEstimate]:
    """Estimate XB for every set in ``family`` from one shared path stream.

    Pairs range over all ordered vertex pairs; a sampled path credits a set
    only if none of its members is an endpoint and exactly one is internal.
    """
    sets = [g.vertex_set(s) for s in family]
    if not sets:
        raise ValueError("candidate family is empty")
    if T < 1:
        raise ValueError("need at least one sample")
    dist = dist or PairDistribution.uniform_pair(g)
    incidence = np.zeros((len(sets), g.n), dtype=np.int64)
    for r, s in enumerate(sets):
        incidence[r, list(s)] = 1
    dags = all_pairs(g).dags
    probs = [float(p) for p in dist.probs]
    rng = np.random.default_rng(seed)
    stats = RunningStats((len(sets),))
    for k in dist.draw(rng, T):
        i, j = int(dist.pairs[k, 0]), int(dist.pairs[k, 1])
        dag = dags[i]
        path = sample_shortest_path(dag, j, rng)
        hits = incidence[:, path[1:-1]].sum(axis=1)
        clean = (incidence[:, i] == 0) & (incidence[:, j] == 0)
        weight = dag.sigma[j] / probs[k]
        stats.push(np.where(clean & (hits == 1), weight, 0.0))
    var = stats.variance
    return [
        SampleEstimate(float(stats.mean[r]), float(var[r]), T, seed, s, "family")
        for r, s in enumerate(sets)
    ]
