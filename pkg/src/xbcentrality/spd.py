"""Per-source shortest-path machinery: BFS distances, path counts, the
shortest-path DAG, avoid-set counting and uniform path sampling."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import GuardExceeded, PathCountOverflow, UnreachableError
from .graph import Graph

U64_MAX = 2**64 - 1
INF = math.inf


def check_u64(value: int, what: str = "path count") -> int:
    if value < 0 or value > U64_MAX:
        raise PathCountOverflow(f"{what} {value} does not fit in an unsigned 64-bit integer")
    return value


@dataclass(frozen=True)
class DistSigmaRow:
    source: int
    dist: list  # int hop counts, INF where unreachable
    sigma: list[int]


@dataclass(frozen=True)
class ShortestPathDag(DistSigmaRow):
    preds: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]  # reachable vertices in non-decreasing distance


def _bfs(g: Graph, s: int, forbidden: frozenset[int]) -> tuple[list, list[int], list[list[int]], list[int]]:
    n = g.n
    dist: list = [INF] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[s] = 0
    sigma[s] = 1
    order = []
    queue = deque([s])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        order.append(v)
        dv = dist[v] + 1
        sv = sigma[v]
        for w in adj[v]:
            if w in forbidden:
                continue
            if dist[w] == INF:
                dist[w] = dv
                queue.append(w)
            if dist[w] == dv:
                sigma[w] += sv
                preds[w].append(v)
    for v in order:
        if sigma[v] > U64_MAX:
            raise PathCountOverflow(
                f"{sigma[v]} shortest paths from {s} to {v} exceed the unsigned 64-bit range"
            )
    return dist, sigma, preds, order


def bfs_sssp(g: Graph, s: int) -> ShortestPathDag:
    """Shortest-path DAG rooted at ``s`` in O(n + m)."""
    if not 0 <= s < g.n:
        raise ValueError(f"source {s} outside 0..{g.n - 1}")
    dist, sigma, preds, order = _bfs(g, s, frozenset())
    return ShortestPathDag(
        source=s,
        dist=dist,
        sigma=sigma,
        preds=tuple(tuple(p) for p in preds),
        order=tuple(order),
    )


def bfs_sssp_avoiding(g: Graph, s: int, forbidden: Iterable[int]) -> DistSigmaRow:
    """Distances and path counts from ``s`` in ``g`` with ``forbidden`` removed."""
    forbidden = frozenset(forbidden)
    if s in forbidden:
        raise ValueError(f"source {s} is in the forbidden set")
    dist, sigma, _, _ = _bfs(g, s, forbidden)
    return DistSigmaRow(source=s, dist=dist, sigma=sigma)


def sample_shortest_path(dag: ShortestPathDag, t: int, rng: np.random.Generator) -> list[int]:
    """Draw one shortest ``source -> t`` path uniformly at random.

    Walks backward from ``t``, choosing predecessor ``p`` of ``v`` with
    probability ``sigma[p] / sigma[v]``; the product telescopes to
    ``1 / sigma[t]`` for every path.
    """
    if dag.sigma[t] == 0:
        raise UnreachableError(f"vertex {t} is not reachable from {dag.source}")
    path = [t]
    v = t
    sigma = dag.sigma
    while v != dag.source:
        ps = dag.preds[v]
        if len(ps) == 1:
            v = ps[0]
        else:
            r = int(rng.integers(0, sigma[v], dtype=np.uint64))
            for p in ps:
                r -= sigma[p]
                if r < 0:
                    v = p
                    break
        path.append(v)
    path.reverse()
    return path


def path_probability(dag: ShortestPathDag, path: list[int]) -> Fraction:
    """Exact probability that :func:`sample_shortest_path` returns ``path``."""
    prob = Fraction(1)
    for p, v in zip(path[:-1], path[1:]):
        if p not in dag.preds[v]:
            return Fraction(0)
        prob *= Fraction(dag.sigma[p], dag.sigma[v])
    return prob


def enumerate_shortest_paths(dag: ShortestPathDag, t: int, cap: int = 10**6) -> list[list[int]]:
    """All shortest ``source -> t`` paths in lexicographic order."""
    if dag.sigma[t] == 0:
        raise UnreachableError(f"vertex {t} is not reachable from {dag.source}")
    if dag.sigma[t] > cap:
        raise GuardExceeded(f"{dag.sigma[t]} shortest paths to {t} exceed cap {cap}")
    out: list[list[int]] = []
    suffix = [t]

    def walk(v: int) -> None:
        if v == dag.source:
            out.append(suffix[::-1])
            return
        for p in dag.preds[v]:
            suffix.append(p)
            walk(p)
            suffix.pop()

    walk(t)
    out.sort()
    return out


class AllPairs:
    """Cached BFS rows from every source, plus dense distance / count matrices.

    ``dist`` is ``int64`` and ``sigma`` is ``uint64``; construction fails with
    :class:`PathCountOverflow` if any count leaves the 64-bit range.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.dags = [bfs_sssp(g, s) for s in range(g.n)]
        n = g.n
        dist = np.full((n, n), -1, dtype=np.int64)
        sigma = np.zeros((n, n), dtype=np.uint64)
        total = 0
        for s, dag in enumerate(self.dags):
            for v in dag.order:
                dist[s, v] = dag.dist[v]
                sigma[s, v] = dag.sigma[v]
            total += sum(dag.sigma) - 1
        self.dist = dist
        self.sigma = sigma
        # number of shortest paths over all ordered pairs s != t
        self.total_paths = total

    @cached_property
    def small(self) -> bool:
        """True when every sum of path counts fits in signed 64-bit arithmetic."""
        return self.total_paths < 2**62
