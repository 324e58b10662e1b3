"""Correlation study over all k-subsets and the exact-XB runtime benchmark."""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import GuardExceeded
from .exact import (
    SUBSET_GUARD,
    all_pairs,
    co_betweenness,
    exclusive_betweenness_ie,
    group_betweenness_ie,
)
from .graph import Graph
from .stats import pearson, spearman

MEASURES = ("xb", "gb", "cb")
MEASURE_PAIRS = (("xb", "gb"), ("xb", "cb"), ("gb", "cb"))
SET_GUARD = 10**6


@dataclass
class CorrelationReport:
    rows: list[tuple[tuple[int, ...], int, int, int]]  # (original ids, xb, gb, cb)
    pearson: dict[tuple[str, str], float] = field(default_factory=dict)
    spearman: dict[tuple[str, str], float] = field(default_factory=dict)

    def column(self, measure: str) -> list[int]:
        i = 1 + MEASURES.index(measure)
        return [row[i] for row in self.rows]


def correlate(g: Graph, size: int = 2, guard: int = SET_GUARD) -> CorrelationReport:
    """Exact XB, GB and CB for every vertex set of ``size``, plus correlations."""
    if not 1 <= size < g.n:
        raise ValueError(f"set size must lie in 1..{g.n - 1}")
    if size > SUBSET_GUARD:
        raise GuardExceeded(f"set size {size} exceeds the inclusion-exclusion guard")
    count = math.comb(g.n, size)
    if count > guard:
        raise GuardExceeded(f"{count} sets of size {size} exceed the guard {guard}")
    rows = []
    for a in combinations(range(g.n), size):
        rows.append(
            (
                tuple(g.labels[v] for v in a),
                exclusive_betweenness_ie(g, a),
                group_betweenness_ie(g, a),
                co_betweenness(g, a),
            )
        )
    report = CorrelationReport(rows)
    for m1, m2 in MEASURE_PAIRS:
        x, y = report.column(m1), report.column(m2)
        report.pearson[(m1, m2)] = pearson(x, y)
        report.spearman[(m1, m2)] = spearman(x, y)
    return report


def correlation_csv(report: CorrelationReport, metadata: dict[str, object] | None = None) -> str:
    buf = io.StringIO()
    for key, value in (metadata or {}).items():
        buf.write(f"# {key}: {value}\n")
    for m1, m2 in MEASURE_PAIRS:
        buf.write(
            f"# pearson({m1},{m2}) = {report.pearson[(m1, m2)]:.6f}; "
            f"spearman({m1},{m2}) = {report.spearman[(m1, m2)]:.6f}\n"
        )
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["set", *MEASURES])
    for members, xb, gb, cb in report.rows:
        writer.writerow(["-".join(str(v) for v in members), xb, gb, cb])
    return buf.getvalue()


def read_correlation_csv(path: str | Path) -> list[tuple[tuple[int, ...], int, int, int]]:
    with open(path, newline="") as fh:
        lines = [line for line in fh if not line.startswith("#")]
    reader = csv.DictReader(lines)
    return [
        (tuple(int(v) for v in row["set"].split("-")), int(row["xb"]), int(row["gb"]), int(row["cb"]))
        for row in reader
    ]


# ---------------------------------------------------------------- benchmark


@dataclass
class BenchRow:
    k: int
    times: list[float]
    sets: list[tuple[int, ...]]

    @property
    def trials(self) -> int:
        return len(self.times)

    @property
    def max_time(self) -> float:
        return max(self.times)

    @property
    def median_time(self) -> float:
        return statistics.median(self.times)


@dataclass
class BenchReport:
    rows: list[BenchRow]
    cache_build_time: float
    seed: int

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# seed: {self.seed}\n# cache_build_seconds: {self.cache_build_time:.6f}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "trials", "max_seconds", "median_seconds", "times"])
        for r in self.rows:
            writer.writerow(
                [r.k, r.trials, f"{r.max_time:.6f}", f"{r.median_time:.6f}",
                 " ".join(f"{t:.6f}" for t in r.times)]
            )
        return buf.getvalue()


def bench(g: Graph, sizes: Iterable[int], trials: int = 50, seed: int = 0) -> BenchReport:
    """Time exact XB on ``trials`` uniform random k-subsets for each k.

    The all-pairs BFS cache is built (and timed) once up front, so the
    per-set times measure only the inclusion-exclusion evaluation.
    """
    sizes = list(sizes)
    for k in sizes:
        if not 1 <= k <= SUBSET_GUARD or k >= g.n:
            raise GuardExceeded(f"set size {k} outside 1..{min(SUBSET_GUARD, g.n - 1)}")
    if trials < 1:
        raise ValueError("need at least one trial")
    t0 = time.perf_counter()
    all_pairs(g)
    build = time.perf_counter() - t0
    rng = np.random.default_rng(seed)
    rows = []
    for k in sizes:
        times, sets = [], []
        for _ in range(trials):
            a = tuple(sorted(int(v) for v in rng.choice(g.n, size=k, replace=False)))
            t0 = time.perf_counter()
            exclusive_betweenness_ie(g, a)
            times.append(max(time.perf_counter() - t0, 1e-9))
            sets.append(a)
        rows.append(BenchRow(k, times, sets))
    return BenchReport(rows, build, seed)
