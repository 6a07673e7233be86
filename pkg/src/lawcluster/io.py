"""Reading and writing data sets, partitions and run manifests.

Two CSV layouts are understood:

``wide-csv``
    one file per data set; the header row holds the grid times and every
    following row is one sample. The data set label is the file stem.
``long-csv``
    a single file with columns ``set_id, sample_id, t, value``.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
from collections import OrderedDict
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameter, NonFiniteValue, ParseError
from .types import DataSet, Grid, Partition, validate_common_grid

FORMATS = ("wide-csv", "long-csv")
LONG_COLUMNS = ("set_id", "sample_id", "t", "value")


def fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(float(x), ".17g")


def _parse_float(text: str, path, line: int) -> float:
    try:
        x = float(text)
    except ValueError:
        raise ParseError(f"not a number: {text!r}", path, line) from None
    if not math.isfinite(x):
        raise NonFiniteValue(f"{path}:{line}: non-finite value {text!r}")
    return x


def _make_grid(times: Sequence[float], path, line: int) -> Grid:
    try:
        return Grid(np.asarray(times))
    except InvalidParameter as exc:
        raise ParseError(f"bad time grid: {exc}", path, line) from None


def load_wide_csv(path, id=None) -> DataSet:
    path = Path(path)
    if not path.is_file():
        raise ParseError("no such file", path)
    with path.open(newline="") as fh:
        rows = [(n, r) for n, r in enumerate(csv.reader(fh), start=1) if r and any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty file", path)
    hline, header = rows[0]
    grid = _make_grid([_parse_float(c, path, hline) for c in header], path, hline)
    values = []
    for line, row in rows[1:]:
        if len(row) != grid.size:
            raise ParseError(f"expected {grid.size} values, found {len(row)}", path, line)
        values.append([_parse_float(c, path, line) for c in row])
    if len(values) < 2:
        raise ParseError(f"need at least 2 samples, found {len(values)}", path)
    return DataSet(path.stem if id is None else id, np.array(values), grid)


def load_long_csv(path) -> list[DataSet]:
    path = Path(path)
    if not path.is_file():
        raise ParseError("no such file", path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [c.strip() for c in next(reader)]
        except StopIteration:
            raise ParseError("empty file", path) from None
        if tuple(header) != LONG_COLUMNS:
            raise ParseError(f"header must be {','.join(LONG_COLUMNS)}, got {','.join(header)}", path, 1)
        # set -> sample -> t -> value
        cells: OrderedDict = OrderedDict()
        first_line: dict = {}
        for line, row in enumerate(reader, start=2):
            if not row or not any(c.strip() for c in row):
                continue
            if len(row) != 4:
                raise ParseError(f"expected 4 columns, found {len(row)}", path, line)
            set_id, sample_id = row[0].strip(), row[1].strip()
            t = _parse_float(row[2], path, line)
            value = _parse_float(row[3], path, line)
            samples = cells.setdefault(set_id, OrderedDict())
            obs = samples.setdefault(sample_id, {})
            first_line.setdefault((set_id, sample_id), line)
            if t in obs:
                raise ParseError(f"duplicate cell (set {set_id}, sample {sample_id}, t={row[2]})", path, line)
            obs[t] = value
    if not cells:
        raise ParseError("no data rows", path)

    datasets = []
    for set_id, samples in cells.items():
        times = sorted({t for obs in samples.values() for t in obs})
        grid = _make_grid(times, path, first_line[(set_id, next(iter(samples)))])
        values = []
        for sample_id, obs in samples.items():
            missing = [t for t in times if t not in obs]
            if missing:
                raise ParseError(
                    f"set {set_id}, sample {sample_id} has no value at t={fmt(missing[0])}",
                    path,
                    first_line[(set_id, sample_id)],
                )
            values.append([obs[t] for t in times])
        if len(values) < 2:
            raise ParseError(f"set {set_id} needs at least 2 samples", path)
        datasets.append(DataSet(set_id, np.array(values), grid))
    return datasets


def expand_paths(paths) -> list[Path]:
    if isinstance(paths, (str, Path)):
        paths = [paths]
    out = []
    for p in map(Path, paths):
        if p.is_dir():
            out.extend(sorted(p.glob("*.csv")))
        else:
            out.append(p)
    return out


def load_datasets(paths, format: str = "wide-csv") -> list[DataSet]:
    """Load data sets from files or directories and check they share a grid.

    Raises:
        ParseError: unreadable or malformed input (with the line number).
        NonFiniteValue: a NaN or infinite value.
        GridMismatch: data sets on different grids.
    """
    if format not in FORMATS:
        raise InvalidParameter(f"format must be one of {FORMATS}, got {format!r}")
    files = expand_paths(paths)
    if not files:
        raise ParseError(f"no input files found in {paths}")
    if format == "wide-csv":
        datasets = [load_wide_csv(f) for f in files]
    else:
        datasets = [ds for f in files for ds in load_long_csv(f)]
    labels = [ds.id for ds in datasets]
    if len(set(labels)) != len(labels):
        raise ParseError(f"duplicate data set labels: {labels}")
    validate_common_grid(datasets)
    return datasets


def save_wide_csv(dataset: DataSet, path) -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([fmt(t) for t in dataset.grid.t_values])
        for row in dataset.values:
            w.writerow([fmt(x) for x in row])


def save_long_csv(datasets: Iterable[DataSet], path) -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(LONG_COLUMNS)
        for ds in datasets:
            for n, row in enumerate(ds.values):
                for t, x in zip(ds.grid.t_values, row):
                    w.writerow([ds.id, n, fmt(t), fmt(x)])


def save_partition(partition: Partition, path) -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["label", "cluster"])
        for label, c in partition.assignment.items():
            w.writerow([label, c])


def load_partition(path) -> Partition:
    with Path(path).open(newline="") as fh:
        rows = list(csv.reader(fh))
    return Partition({r[0]: int(r[1]) for r in rows[1:] if r})


def file_digest(path) -> str:
    h = hashlib.sha256()
    with Path(path).open("rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class RunManifest:
    """Everything needed to rerun a clustering and check its outputs."""

    config: dict
    inputs: dict
    outputs: dict
    tool_version: str
    extra: dict = field(default_factory=dict)

    def write(self, path) -> None:
        Path(path).write_text(json.dumps(asdict(self), indent=2, sort_keys=True) + "\n")

    @classmethod
    def read(cls, path) -> RunManifest:
        return cls(**json.loads(Path(path).read_text()))


def describe_inputs(files: Sequence[Path], datasets: Sequence[DataSet]) -> dict:
    grid = datasets[0].grid
    return {
        "files": {str(f): file_digest(f) for f in files},
        "N": {str(ds.id): ds.N for ds in datasets},
        "grid": {"points": grid.size, "T": grid.T},
    }

