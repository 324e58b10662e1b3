"""Bundled graphs and a seeded synthetic generator for benchmarks."""

from __future__ import annotations

from importlib import resources

import numpy as np

from .graph import Graph, load_edge_list


def data_path(name: str):
    return resources.files("xbcentrality") / "data" / name


def load_bundled(name: str) -> Graph:
    return load_edge_list(data_path(name).read_text(encoding="utf-8"))


def figure1() -> Graph:
    """Nine-vertex example graph with original ids 1..9."""
    return load_bundled("figure1.txt")


def karate_club() -> Graph:
    """Zachary's karate club, original ids 1..34."""
    return load_bundled("karate.txt")


def random_connected_graph(n: int, m: int, seed: int) -> Graph:
    """Connected graph with exactly ``n`` vertices and ``m`` edges.

    A random recursive tree supplies connectivity; the remaining edges attach
    one uniformly chosen endpoint to a degree-biased one, which gives the
    heavy-tailed degrees typical of collaboration networks.
    """
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise ValueError(f"cannot build a connected simple graph with n={n}, m={m}")
    rng = np.random.default_rng(seed)
    edges: set[tuple[int, int]] = set()
    ends: list[int] = []
    perm = rng.permutation(n)
    for i in range(1, n):
        u, v = int(perm[i]), int(perm[rng.integers(0, i)])
        edges.add((min(u, v), max(u, v)))
        ends += [u, v]
    while len(edges) < m:
        u = int(rng.integers(0, n))
        v = ends[int(rng.integers(0, len(ends)))] if rng.random() < 0.7 else int(rng.integers(0, n))
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e not in edges:
            edges.add(e)
            ends += [u, v]
    return Graph.from_edges(n, sorted(edges))
