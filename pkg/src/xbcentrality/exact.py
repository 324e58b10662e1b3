"""Exact betweenness, group betweenness, co-betweenness and exclusive betweenness.

Every value is a count of shortest paths summed over ORDERED endpoint pairs
``(s, t)`` with ``s != t``; set measures additionally require ``s, t`` to lie
outside the set. Undirected graphs therefore always give even values; use
:func:`to_unordered` for the halved presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import GuardExceeded, InvalidVertexSetError
from .graph import Graph, VertexSet
from .spd import AllPairs, bfs_sssp, bfs_sssp_avoiding, check_u64

SUBSET_GUARD = 12


@lru_cache(maxsize=8)
def all_pairs(g: Graph) -> AllPairs:
    """Shared, read-only BFS cache for ``g``."""
    return AllPairs(g)


def to_unordered(value: int) -> int:
    assert value % 2 == 0, "ordered-pair counts on undirected graphs are even"
    return value // 2


def _as_set(g: Graph, a: Iterable[int]) -> VertexSet:
    return g.vertex_set(a)


def _outside(n: int, excl: Iterable[int]) -> np.ndarray:
    mask = np.ones(n, dtype=bool)
    mask[list(excl)] = False
    return mask


def _masked_sum(ap: AllPairs, values: np.ndarray, mask: np.ndarray) -> int:
    # Masked entries are bounded by sigma[s, t], so they are exact in uint64;
    # entries outside the mask may have wrapped and are discarded.
    picked = values[mask]
    if ap.small:
        total = int(picked.astype(np.int64).sum())
    else:
        total = sum(int(x) for x in picked)
    return check_u64(total, "centrality value")


# ---------------------------------------------------------------- betweenness


@dataclass(frozen=True)
class DependencyRow:
    source: int
    delta: list[int]  # delta[v] = sum over t of sigma_st(v)


def dependency_row(g: Graph, s: int) -> DependencyRow:
    """Integer dependency accumulation over the shortest-path DAG of ``s``.

    ``below[v]`` counts DAG paths that leave ``v`` towards any later vertex,
    so ``sigma[v] * below[v]`` is the number of ``s``-rooted shortest paths
    having ``v`` as an internal vertex.
    """
    dag = bfs_sssp(g, s)
    below = [0] * g.n
    for w in reversed(dag.order):
        for v in dag.preds[w]:
            below[v] += 1 + below[w]
    delta = [0] * g.n
    for v in dag.order:
        if v != s:
            delta[v] = check_u64(dag.sigma[v] * below[v], "dependency")
    return DependencyRow(source=s, delta=delta)


def betweenness_all(g: Graph) -> list[int]:
    """B(v) for every vertex, O(nm) total."""
    b = [0] * g.n
    for s in range(g.n):
        for v, d in enumerate(dependency_row(g, s).delta):
            b[v] += d
    return [check_u64(x, "betweenness") for x in b]


# ---------------------------------------------------------------- co-betweenness


def co_betweenness(g: Graph, members: Iterable[int], excl: Iterable[int] | None = None) -> int:
    """Shortest paths through every vertex of ``members``, endpoints outside ``excl``.

    For a fixed source the members of one shortest path appear in strictly
    increasing distance, so the members are chained in that order (distance
    ties contribute nothing) and the count for ``(s, t)`` is the product of
    segment counts whenever the chain length equals ``d(s, t)``.
    """
    members = _as_set(g, members)
    excl = members if excl is None else _as_set(g, excl)
    if not set(members) <= set(excl):
        raise InvalidVertexSetError(f"exclusion set {excl} must contain {members}")
    ap = all_pairs(g)
    D, S = ap.dist, ap.sigma
    n = g.n
    M = np.asarray(members)
    k = len(members)

    from_s = D[:, M]
    order = np.argsort(from_s, axis=1, kind="stable")
    chain = M[order]
    chain_d = np.take_along_axis(from_s, order, axis=1)
    ties = np.any(np.diff(chain_d, axis=1) == 0, axis=1) if k > 1 else np.zeros(n, bool)

    rows = np.arange(n)
    length = chain_d[:, 0].copy()
    with np.errstate(over="ignore"):
        prod = S[rows, chain[:, 0]].copy()
        for i in range(k - 1):
            length += D[chain[:, i], chain[:, i + 1]]
            prod *= S[chain[:, i], chain[:, i + 1]]
        last = chain[:, -1]
        terms = prod[:, None] * S[last, :]

    out = _outside(n, excl)
    mask = (D == length[:, None] + D[last, :]) & ~ties[:, None] & out[:, None] & out[None, :]
    np.fill_diagonal(mask, False)
    return _masked_sum(ap, terms, mask)


def restricted_betweenness(g: Graph, v: int, excl: Iterable[int]) -> int:
    """B_A(v): paths through ``v`` with both endpoints outside ``excl``."""
    excl = _as_set(g, excl)
    if v not in excl:
        raise InvalidVertexSetError(f"vertex {v} must belong to {excl}")
    return co_betweenness(g, (v,), excl)


# ---------------------------------------------------------------- group betweenness


def group_betweenness_direct(g: Graph, a: Iterable[int]) -> int:
    """Paths through at least one member: all paths minus those avoiding the set."""
    a = _as_set(g, a)
    ap = all_pairs(g)
    blocked = frozenset(a)
    total = 0
    for s in range(g.n):
        if s in blocked:
            continue
        full = ap.dags[s]
        res = bfs_sssp_avoiding(g, s, blocked)
        for t in range(g.n):
            if t == s or t in blocked:
                continue
            avoid = res.sigma[t] if res.dist[t] == full.dist[t] else 0
            total += full.sigma[t] - avoid
    return check_u64(total, "group betweenness")


def _guard(a: VertexSet, guard: int) -> None:
    if len(a) > guard:
        raise GuardExceeded(
            f"|A| = {len(a)} needs 2^{len(a)} co-betweenness terms (guard {guard})"
        )


def _alternating(g: Graph, a: VertexSet, weight, guard: int) -> int:
    _guard(a, guard)
    acc = 0  # signed, unbounded
    for j in range(1, len(a) + 1):
        coeff = weight(j) * (-1) ** (j - 1)
        for subset in combinations(a, j):
            acc += coeff * co_betweenness(g, subset, a)
    if acc < 0:
        raise AssertionError(f"alternating sum went negative ({acc})")
    return check_u64(acc, "centrality value")


def group_betweenness_ie(g: Graph, a: Iterable[int], guard: int = SUBSET_GUARD) -> int:
    """GB(A) as the alternating sum of CC_A over non-empty subsets."""
    return _alternating(g, _as_set(g, a), lambda j: 1, guard)


# ---------------------------------------------------------------- exclusive betweenness


def exclusive_betweenness_ie(g: Graph, a: Iterable[int], guard: int = SUBSET_GUARD) -> int:
    """XB(A) = sum_j j (-1)^(j-1) sum_{|I|=j} CC_A(I).

    A path meeting r members contributes sum_j j (-1)^(j-1) C(r, j), which is
    1 for r = 1 and 0 otherwise.
    """
    return _alternating(g, _as_set(g, a), lambda j: j, guard)


def exclusive_count_matrix(g: Graph, a: Iterable[int]) -> np.ndarray:
    """``out[s, t]``: shortest ``s -> t`` paths with exactly one internal member of ``a``.

    For each member ``v`` the paths through ``v`` avoiding the other members
    are counted by one BFS from ``v`` in ``g - (a - {v})``. Rows and columns of
    members, and the diagonal, are zero. Entries are ``uint64``.
    """
    a = _as_set(g, a)
    ap = all_pairs(g)
    n = g.n
    D = ap.dist
    out = np.zeros((n, n), dtype=np.uint64)
    outside = _outside(n, a)
    pair_mask = outside[:, None] & outside[None, :]
    np.fill_diagonal(pair_mask, False)
    far = 2 * n + 2
    for v in a:
        row = bfs_sssp_avoiding(g, v, [u for u in a if u != v])
        d = np.array([far if x == float("inf") else x for x in row.dist], dtype=np.int64)
        sg = np.array(row.sigma, dtype=np.uint64)
        mask = pair_mask & (d[:, None] + d[None, :] == D)
        with np.errstate(over="ignore"):
            terms = sg[:, None] * sg[None, :]
        out[mask] += terms[mask]
    return out


def exclusive_betweenness_direct(g: Graph, a: Iterable[int]) -> int:
    """XB(A) by counting, per member, the paths that avoid every other member."""
    a = _as_set(g, a)
    ap = all_pairs(g)
    counts = exclusive_count_matrix(g, a)
    return _masked_sum(ap, counts, np.ones_like(counts, dtype=bool))


def per_source_exclusive(g: Graph, s: int, a: Iterable[int]) -> int:
    """Shortest paths starting at ``s`` with exactly one internal member of ``a``."""
    a = _as_set(g, a)
    if s in a:
        raise InvalidVertexSetError(f"source {s} must lie outside {a}")
    row = exclusive_count_matrix(g, a)[s]
    return check_u64(sum(int(x) for x in row), "per-source count")


def exclusive_pair(g: Graph, v1: int, v2: int) -> int:
    """XB({v1, v2}) = B_A(v1) + B_A(v2) - 2 CC_A({v1, v2})."""
    if v1 == v2:
        raise InvalidVertexSetError("exclusive_pair needs two distinct vertices")
    a = _as_set(g, (v1, v2))
    value = (
        restricted_betweenness(g, v1, a)
        + restricted_betweenness(g, v2, a)
        - 2 * co_betweenness(g, a, a)
    )
    return check_u64(value, "exclusive pair value")
