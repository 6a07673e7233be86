# %% [markdown]
# # The data-driven cut threshold
#
# The dendrogram is cut at gamma*, the smallest value of a concentration bound
# over an auxiliary level delta in (0, alpha). Three terms compete: a variance
# term, a DKW term in the sample size and a small bias term in M.

# %%
import numpy as np

from lawcluster import ThresholdConfig, minimize_threshold, theorem1_bound
from lawcluster.bounds import threshold_objective, threshold_terms

cfg = ThresholdConfig(alpha=np.sqrt(1 / 100), N=100, M=1000, V_star=0.004)
res = minimize_threshold(cfg)
print(f"gamma* = {res.gamma:.5f} at delta = {res.delta:.4g}")
print("terms:", np.round(threshold_terms(res.delta, cfg), 5))

# %% [markdown]
# The objective blows up at both ends of (0, alpha); the minimum sits in
# between.

# %%
deltas = np.geomspace(1e-6, cfg.alpha * (1 - 1e-6), 7)
for d, v in zip(deltas, threshold_objective(deltas, cfg)):
    print(f"delta={d:.3g}  objective={v:.4f}")

# %% [markdown]
# The DKW term dominates, so gamma* shrinks like 1/sqrt(N).

# %%
for N in (40, 80, 160, 320, 640):
    c = ThresholdConfig(alpha=np.sqrt(1 / N), N=N, M=10 * N, V_star=0.004)
    print(N, round(minimize_threshold(c).gamma, 4))

# %% [markdown]
# The cruder tail bound on the averaged distance only drops below 1 for
# large gaps or large samples.

# %%
for gamma in (0.2, 0.4, 0.6, 0.8):
    print(gamma, round(theorem1_bound(gamma, N=100, M=1000), 4))
