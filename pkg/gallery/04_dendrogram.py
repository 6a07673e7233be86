# %% [markdown]
# # Complete linkage and cutting the dendrogram
#
# Sets are merged bottom-up, always joining the two clusters whose farthest
# members are closest. Cutting at gamma keeps every merge strictly below it.

# %%
import numpy as np

from lawcluster import DistanceMatrix, complete_linkage, cut_at_threshold, partition_at_k

d = np.array(
    [
        [0.0, 0.1, 0.9],
        [0.1, 0.0, 0.8],
        [0.9, 0.8, 0.0],
    ]
)
dendro = complete_linkage(DistanceMatrix(("a", "b", "c"), d, np.zeros_like(d)))
for m in dendro.merges:
    print(m)

# %% [markdown]
# The second merge has height max(0.9, 0.8) = 0.9, not 0.8.

# %%
for gamma in (0.05, 0.5, 0.9, 1.0):
    print(gamma, cut_at_threshold(dendro, gamma).clusters())

# %%
print(partition_at_k(dendro, 2).clusters())

# %% [markdown]
# The dendrogram serializes to JSON so a cut can be redone later at another
# threshold.

# %%
print(dendro.to_json())
