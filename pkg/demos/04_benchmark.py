"""Exact XB runtime as the set grows.

Uses a random connected graph with 379 vertices and 914 edges. Pass an edge
list path as the first argument to time a real network instead.
"""

# %%
import sys

from xbcentrality.analysis import bench
from xbcentrality.datasets import random_connected_graph
from xbcentrality.graph import LoadOptions, largest_component, load_edge_list

if len(sys.argv) > 1:
    g = largest_component(load_edge_list(sys.argv[1], LoadOptions(require_connected=False)))
else:
    g = random_connected_graph(379, 914, seed=2019)
print(f"n={g.n} m={g.m}")

# %% all-pairs cache first, then 50 random sets per size
report = bench(g, range(2, 6), trials=50, seed=0)
print(f"cache build: {report.cache_build_time:.3f} s")
for r in report.rows:
    print(f"k={r.k}  median {r.median_time * 1e3:7.2f} ms   max {r.max_time * 1e3:7.2f} ms")

# %% the inclusion-exclusion sum has 2^k - 1 terms, so time roughly doubles per k
ratios = [b.median_time / a.median_time for a, b in zip(report.rows, report.rows[1:])]
print("median ratio per step:", [round(x, 2) for x in ratios])
