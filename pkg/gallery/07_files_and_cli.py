# %% [markdown]
# # Files and the command line
#
# Data sets are read from CSV. In the wide layout each file is one data set:
# the header row holds grid times and each row is one sample. The same
# clustering is available as `lawcluster cluster`.

# %%
import tempfile
from pathlib import Path

from lawcluster.cli import main
from lawcluster.io import load_datasets, save_wide_csv
from lawcluster.simulate import generate_sets

workdir = Path(tempfile.mkdtemp())
sets, _ = generate_sets("sbb", (1.0, 1.0, 4.0), N=80, seed=5)
for ds in sets:
    save_wide_csv(ds, workdir / f"{ds.id}.csv")
print(sorted(p.name for p in workdir.iterdir()))

# %%
loaded = load_datasets([workdir])
[(ds.id, ds.values.shape) for ds in loaded]

# %% [markdown]
# The command writes distances, variances, the dendrogram, the partition,
# gamma* and a manifest with input checksums.

# %%
main(["cluster", str(workdir), "--seed", "1", "--out", str(workdir / "out")])
print(sorted(p.name for p in (workdir / "out").iterdir()))
print((workdir / "out" / "partition.csv").read_text())
