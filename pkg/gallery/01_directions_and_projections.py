# %% [markdown]
# # Random directions and projections
#
# Each functional sample is reduced to a scalar by integrating it against a
# random Brownian-bridge path. This script draws a few bridges, checks their
# pinned endpoints and projects a small data set onto them.

# %%
import numpy as np

from lawcluster import DataSet, Grid, project, project_set, sample_directions

grid = Grid.uniform(80)  # 80 equispaced points on [0, 1]
directions = sample_directions(grid, M=5, seed=0)
directions.paths.shape

# %% [markdown]
# Bridges start and end at exactly zero; in between their variance is
# t(1 - t), so about 0.25 at the midpoint.

# %%
print(directions.paths[:, [0, -1]])

many = sample_directions(grid, M=4000, seed=1).paths
print("variance at t=0.5:", many[:, 40].var().round(3))

# %% [markdown]
# Direction m depends only on the seed and m, so asking for more directions
# extends the set without changing the first ones.

# %%
more = sample_directions(grid, M=8, seed=0)
np.array_equal(more.paths[:5], directions.paths)

# %% [markdown]
# The projection is a trapezoidal integral. For Y(t) = t against the
# constant 1 it returns 1/2 exactly.

# %%
g81 = Grid.uniform(81)
project(g81.t_values, np.ones(81), g81)

# %%
rng = np.random.default_rng(2)
data = DataSet("demo", rng.standard_normal((30, 80)), grid)
proj = project_set(data, directions)
print(proj.values.shape)  # one row per sample, one column per direction
