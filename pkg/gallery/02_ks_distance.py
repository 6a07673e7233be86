# %% [markdown]
# # Kolmogorov-Smirnov distances between data sets
#
# Projections give one scalar sample per direction. Two data sets are compared
# by the two-sample KS distance in each direction, averaged over directions.

# %%
import numpy as np

from lawcluster import Grid, distance_matrix, gen_sbb, ks_gof_test, ks_two_sample, sample_directions

print(ks_two_sample([1, 2], [3, 4]))  # disjoint supports
print(ks_two_sample([1, 3], [2, 4]))  # interleaved
print(ks_two_sample([1, 2], [1, 3]))  # a tie at 1 cancels out

# %% [markdown]
# Scaled Brownian bridges with scales 1, 1, 2 and 4: the two unit-scale sets
# should be close to each other and far from the rest.

# %%
grid = Grid.uniform(80)
rng = np.random.default_rng(0)
sets = [gen_sbb(theta, 100, grid, rng, id=f"theta={theta}:{i}") for i, theta in enumerate([1, 1, 2, 4])]
matrix = distance_matrix(sets, sample_directions(grid, 1000, seed=1))
print(np.round(matrix.dist, 3))

# %% [markdown]
# The per-pair variance of the per-direction distances feeds the threshold
# (see the next script). Its maximum is usually small.

# %%
print("max variance:", matrix.max_variance)

# %% [markdown]
# A single direction also gives a classical goodness-of-fit test of equal
# laws, using the limiting Kolmogorov distribution.

# %%
from lawcluster import project_set

one = sample_directions(grid, 1, seed=3)
x = project_set(sets[0], one).values[:, 0]
for other in sets[1:]:
    y = project_set(other, one).values[:, 0]
    print(other.id, ks_gof_test(x, y))
