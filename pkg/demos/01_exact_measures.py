"""Exact set centralities on the nine-vertex example graph.

Counts are over ordered endpoint pairs; halve them for unordered pairs.
"""

# %%
from xbcentrality import (
    betweenness_all,
    co_betweenness,
    exclusive_betweenness_direct,
    exclusive_betweenness_ie,
    group_betweenness_direct,
    per_source_exclusive,
)
from xbcentrality.datasets import figure1
from xbcentrality.oracle import build_path_set

g = figure1()
print(f"n={g.n} m={g.m}")
print("edges:", [(g.labels[u], g.labels[v]) for u, v in g.edges()])

# %% plain betweenness, keyed by file label
b = betweenness_all(g)
for v in range(g.n):
    print(f"B({g.labels[v]}) = {b[v]}")

# %% the set {2, 6, 7}
a = g.vertex_set([2, 6, 7], labels=True)
print("XB (inclusion-exclusion):", exclusive_betweenness_ie(g, a))
print("XB (direct BFS)         :", exclusive_betweenness_direct(g, a))
print("GB                      :", group_betweenness_direct(g, a))
print("CB                      :", co_betweenness(g, a))

# %% from source 1 only: which paths hit exactly one member?
src = g.index_of(1)
print("paths from 1 with exactly one member:", per_source_exclusive(g, src, a))
ps = build_path_set(g, endpoint_excl=a, sources=[src])
for p in sorted(ps.paths):
    hits = [g.labels[v] for v in p[1:-1] if v in a]
    mark = "*" if len(hits) == 1 else " "
    print(mark, "-".join(str(g.labels[v]) for v in p), hits)
