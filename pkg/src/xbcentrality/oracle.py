"""Brute-force ground truth by listing every shortest path of a small graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import GuardExceeded
from .graph import Graph
from .spd import bfs_sssp, enumerate_shortest_paths

DEFAULT_CAP = 10**6


@dataclass
class PathSet:
    """Shortest paths over ordered endpoint pairs, indexed by internal vertex.

    ``through[v]`` holds the ids of paths having ``v`` as an internal vertex.
    """

    paths: list[tuple[int, ...]] = field(default_factory=list)
    through: dict[int, set[int]] = field(default_factory=dict)
    endpoint_excl: frozenset[int] = frozenset()

    def __len__(self) -> int:
        return len(self.paths)

    def add(self, path: tuple[int, ...]) -> None:
        pid = len(self.paths)
        self.paths.append(path)
        for v in path[1:-1]:
            self.through.setdefault(v, set()).add(pid)

    def passing(self, v: int) -> set[int]:
        return self.through.get(v, set())

    def between(self, exclude: Iterable[int]) -> set[int]:
        """Ids of paths whose endpoints both avoid ``exclude``."""
        ex = set(exclude)
        return {i for i, p in enumerate(self.paths) if p[0] not in ex and p[-1] not in ex}


def build_path_set(
    g: Graph,
    endpoint_excl: Iterable[int] = (),
    cap: int = DEFAULT_CAP,
    sources: Iterable[int] | None = None,
) -> PathSet:
    """Every shortest path between ordered pairs ``s != t`` outside ``endpoint_excl``.

    ``sources`` restricts the enumeration to paths starting at those vertices.
    """
    excl = frozenset(endpoint_excl)
    ps = PathSet(endpoint_excl=excl)
    srcs = range(g.n) if sources is None else sources
    for s in srcs:
        if s in excl:
            continue
        dag = bfs_sssp(g, s)
        for t in range(g.n):
            if t == s or t in excl or dag.sigma[t] == 0:
                continue
            if len(ps) + dag.sigma[t] > cap:
                raise GuardExceeded(f"more than {cap} shortest paths")
            for path in enumerate_shortest_paths(dag, t, cap):
                ps.add(tuple(path))
    return ps


class BruteCounts(NamedTuple):
    exactly_one: int
    at_least_one: int
    all_members: int
    odd_members: int


def brute_counts(ps: PathSet, a: Iterable[int]) -> BruteCounts:
    """Tally paths by how many members of ``a`` they pass internally.

    Paths with an endpoint in ``a`` are skipped, so a path set built with a
    smaller (or empty) endpoint exclusion can be reused for any ``a``.
    """
    a = set(a)
    exactly = least = every = odd = 0
    for path in ps.paths:
        if path[0] in a or path[-1] in a:
            continue
        r = sum(1 for v in path[1:-1] if v in a)
        if r == 1:
            exactly += 1
        if r >= 1:
            least += 1
        if r == len(a):
            every += 1
        if r % 2 == 1:
            odd += 1
    return BruteCounts(exactly, least, every, odd)


def brute_betweenness(ps: PathSet, v: int) -> int:
    return len(ps.passing(v))
