"""Undirected, unweighted simple graphs and edge-list ingestion."""

from __future__ import annotations

import io
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .errors import DisconnectedGraphError, GraphFormatError, InvalidVertexSetError

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on dense vertex ids ``0..n-1``.

    ``labels[v]`` is the id vertex ``v`` carried in the source file, kept so
    results can be reported in the caller's numbering.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int
    labels: tuple[int, ...]
    dropped_duplicates: int = 0
    dropped_self_loops: int = 0
    _label_index: dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self._label_index:
            self._label_index.update({lab: i for i, lab in enumerate(self.labels)})

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[int] | None = None,
    ) -> Graph:
        """Build a graph from 0-based edges; duplicates and self-loops are dropped."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        dup = loops = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexSetError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                loops += 1
            elif v in nbrs[u]:
                dup += 1
            else:
                nbrs[u].add(v)
                nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        m = sum(len(a) for a in adjacency) // 2
        return cls(
            n=n,
            adjacency=adjacency,
            m=m,
            labels=tuple(labels) if labels is not None else tuple(range(n)),
            dropped_duplicates=dup,
            dropped_self_loops=loops,
        )

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def index_of(self, label: int) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise InvalidVertexSetError(f"unknown vertex id {label}") from None

    def vertex_set(self, members: Iterable[int], *, labels: bool = False) -> VertexSet:
        """Validate ``members`` as a non-empty proper subset and return it sorted.

        With ``labels=True`` the members are original file ids and are
        translated to dense ids first.
        """
        ids = [self.index_of(x) for x in members] if labels else list(members)
        if not ids:
            raise InvalidVertexSetError("vertex set is empty")
        if len(set(ids)) != len(ids):
            raise InvalidVertexSetError(f"duplicate members in {sorted(ids)}")
        for v in ids:
            if not 0 <= v < self.n:
                raise InvalidVertexSetError(f"vertex {v} outside 0..{self.n - 1}")
        if len(ids) >= self.n:
            raise InvalidVertexSetError("vertex set must be a proper subset")
        return tuple(sorted(ids))

    def is_connected(self) -> bool:
        return self.n > 0 and len(_component(self, 0)) == self.n


@dataclass(frozen=True)
class LoadOptions:
    index_base: int | None = None  # None: auto-detect from the minimum id
    require_connected: bool = True


def _component(g: Graph, start: int) -> list[int]:
    seen = {start}
    queue = deque([start])
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


def _read_text(source: str | bytes | os.PathLike | IO) -> str:
    if isinstance(source, bytes):
        return source.decode()
    if isinstance(source, str):
        return source
    if isinstance(source, os.PathLike):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    data = source.read()
    return data.decode() if isinstance(data, bytes) else data


def _parse_number(tok: str, lineno: int) -> int | float:
    try:
        return int(tok)
    except ValueError:
        try:
            return float(tok)
        except ValueError:
            raise GraphFormatError(f"unparsable token {tok!r}", lineno) from None


def load_edge_list(
    source: str | bytes | os.PathLike | IO,
    options: LoadOptions | None = None,
) -> Graph:
    """Parse a whitespace-separated edge list.

    ``source`` is the text itself (``str``/``bytes``), a path-like, or a file
    object. Comment lines start with ``%`` or ``#``. A leading line of exactly
    three integers (MatrixMarket size header) is skipped; further numeric
    columns on edge lines (weights) are ignored.

    Ids that already form a contiguous range starting at the index base are
    shifted down to 0; any other id set is renumbered in order of first
    appearance.
    """
    options = options or LoadOptions()
    text = _read_text(source)
    raw: list[tuple[int, int]] = []
    seen_data = False
    for lineno, line in enumerate(io.StringIO(text), start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in "%#":
            continue
        toks = stripped.split()
        nums = [_parse_number(t, lineno) for t in toks]
        if not seen_data and len(nums) == 3 and all(isinstance(x, int) for x in nums):
            seen_data = True
            continue
        seen_data = True
        if len(nums) < 2:
            raise GraphFormatError("expected a vertex pair", lineno)
        u, v = nums[0], nums[1]
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphFormatError("vertex ids must be integers", lineno)
        raw.append((u, v))
    if not raw:
        raise GraphFormatError("no edges in input")

    ids = {x for e in raw for x in e}
    lo = min(ids)
    base = options.index_base
    if base is None:
        base = 1 if lo >= 1 else 0
    elif lo < base:
        raise GraphFormatError(f"vertex id {lo} below index base {base}")

    if ids == set(range(base, base + len(ids))):
        n = len(ids)
        labels = list(range(base, base + n))
        edges = [(u - base, v - base) for u, v in raw]
    else:
        mapping: dict[int, int] = {}
        for e in raw:
            for x in e:
                if x not in mapping:
                    mapping[x] = len(mapping)
        n = len(mapping)
        labels = list(mapping)
        edges = [(mapping[u], mapping[v]) for u, v in raw]

    g = Graph.from_edges(n, edges, labels=labels)
    if options.require_connected and not g.is_connected():
        raise DisconnectedGraphError(
            f"graph has {n} vertices but the component of vertex {labels[0]} "
            f"has {len(_component(g, 0))}; use largest_component()"
        )
    return g


def largest_component(g: Graph) -> Graph:
    """Induced subgraph on the largest component, ids re-densified.

    Ties go to the component containing the smallest original id.
    """
    seen = [False] * g.n
    best: list[int] | None = None
    for v in range(g.n):
        if seen[v]:
            continue
        comp = _component(g, v)
        for w in comp:
            seen[w] = True
        if best is None or len(comp) > len(best) or (
            len(comp) == len(best)
            and min(g.labels[w] for w in comp) < min(g.labels[w] for w in best)
        ):
            best = comp
    assert best is not None
    keep = sorted(best)
    if len(keep) == g.n:
        return g
    new_id = {old: i for i, old in enumerate(keep)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges() if u in new_id and v in new_id]
    return Graph.from_edges(len(keep), edges, labels=[g.labels[v] for v in keep])


def degree_stats(g: Graph) -> tuple[int, Fraction]:
    """Exact (maximum degree, mean degree)."""
    degrees = [len(a) for a in g.adjacency]
    return max(degrees, default=0), Fraction(2 * g.m, g.n)
