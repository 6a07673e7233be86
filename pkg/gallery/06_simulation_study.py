# %% [markdown]
# # Monte Carlo study
#
# Each cell of a study runs many replicates of the clustering and records how
# often the partition is exactly right, plus the two error rates. The run
# below is small enough to finish in a few seconds; the full design uses 100
# replicates per cell.

# %%
from lawcluster import ExperimentConfig, run_experiment

config = ExperimentConfig(model="ar", N_values=(40, 100), sigma_values=(10,), replicates=10, seed=0)
report = run_experiment(config)
print(report.to_csv())

# %% [markdown]
# Replicate seeds depend only on the master seed and the cell, so the report
# is the same whatever the number of worker processes.

# %%
parallel = run_experiment(config, workers=2)
parallel.to_csv() == report.to_csv()

# %% [markdown]
# With matplotlib installed the cells can be charted against N.

# %%
try:
    from lawcluster.plotting import plot_reports

    plot_reports([report], "ar_study.svg")
    print("chart written to ar_study.svg")
except ImportError:
    print("matplotlib not installed; skipping the chart")
