"""Monte Carlo estimates of exclusive betweenness on the karate club graph.

Each sampler is unbiased; the spread of the estimate shrinks like 1/sqrt(T).
"""

# %%
import numpy as np

from xbcentrality import exclusive_betweenness_ie
from xbcentrality.datasets import karate_club
from xbcentrality.sampling import SAMPLERS, estimate, expected_value

g = karate_club()
a = g.vertex_set([1, 34], labels=True)
exact = exclusive_betweenness_ie(g, a)
print(f"karate: n={g.n} m={g.m}; XB({{1,34}}) = {exact}")

# %% relative error vs sample budget
budgets = [100, 1_000, 10_000, 100_000]
print("T".rjust(7), *(s.rjust(10) for s in ("source", "pair", "path")))
for T in budgets:
    row = []
    for sampler in ("source", "pair", "path"):
        est = estimate(g, a, sampler, T=T, seed=42)
        row.append(f"{abs(est.mean - exact) / exact:10.4%}")
    print(f"{T:7d}", *row)

# %% several seeds at T=2000: empirical spread vs reported std error
for sampler in ("source", "pair", "path"):
    runs = [estimate(g, a, sampler, T=2_000, seed=s) for s in range(20)]
    means = np.array([r.mean for r in runs])
    print(f"{sampler:6s} sd(means)={means.std(ddof=1):8.2f}  mean std_error={np.mean([r.std_error for r in runs]):8.2f}")

# %% expectation summed over the whole sample space (small graph, exact rationals)
from xbcentrality.datasets import figure1

f1 = figure1()
b = f1.vertex_set([2, 6, 7], labels=True)
for sampler in SAMPLERS:
    print(sampler, expected_value(f1, b, sampler), "==", exclusive_betweenness_ie(f1, b))
