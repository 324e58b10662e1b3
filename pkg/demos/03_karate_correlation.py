"""How does XB of a vertex pair relate to GB and CB of the same pair?

All 561 two-vertex sets of the karate club graph.
"""

# %%
import numpy as np

from xbcentrality.analysis import correlate
from xbcentrality.datasets import karate_club

g = karate_club()
report = correlate(g, 2)
print("rows:", len(report.rows))
for (m1, m2), r in report.pearson.items():
    print(f"{m1}-{m2}: pearson {r:+.4f}  spearman {report.spearman[(m1, m2)]:+.4f}")

# %% XB never exceeds GB; the gap is paths through both members
xb, gb, cb = (np.asarray(report.column(m), dtype=np.int64) for m in ("xb", "gb", "cb"))
assert np.all(xb <= gb)
print("max GB-XB:", (gb - xb).max())

# %% top sets by XB
order = np.argsort(-xb, kind="stable")[:5]
for i in order:
    members, x, y, z = report.rows[i]
    print(members, x, y, z)

# %% optional scatter plots
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    fig, ax = plt.subplots(1, 2, figsize=(8, 3.5))
    ax[0].scatter(xb, gb, s=6)
    ax[0].set(xlabel="XB", ylabel="GB")
    ax[1].scatter(xb, cb, s=6)
    ax[1].set(xlabel="XB", ylabel="CB")
    fig.tight_layout()
    fig.savefig("karate_correlation.png", dpi=120)
    print("wrote karate_correlation.png")
