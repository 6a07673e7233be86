"""Core value types: the time grid, functional samples, data sets, partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyInput, GridMismatch, InvalidParameter, LengthMismatch, NonFiniteValue

GRID_RTOL = 1e-9


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Grid:
    """Equispaced time grid ``0 = t_0 < ... < t_{G-1} = T``.

    Build one with :meth:`Grid.uniform` unless you already hold the time
    points (e.g. from a CSV header), in which case the constructor checks
    them.
    """

    t_values: np.ndarray

    def __post_init__(self):
        t = np.array(self.t_values, dtype=np.float64)
        if t.ndim != 1 or t.size < 2:
            raise InvalidParameter("a grid needs at least 2 time points")
        if not np.all(np.isfinite(t)):
            raise NonFiniteValue("grid time points must be finite")
        T = t[-1]
        if t[0] != 0.0:
            raise InvalidParameter(f"grid must start at 0, got {t[0]!r}")
        if not T > 0:
            raise InvalidParameter(f"grid horizon must be positive, got {T!r}")
        step = np.diff(t)
        if np.any(step <= 0):
            raise InvalidParameter("grid must be strictly increasing")
        if np.max(np.abs(step - T / (t.size - 1))) > GRID_RTOL * T:
            raise InvalidParameter("grid is not equispaced")
        object.__setattr__(self, "t_values", _frozen(t))

    @classmethod
    def uniform(cls, n_points: int, T: float = 1.0) -> Grid:
        return cls(np.linspace(0.0, T, n_points))

    @property
    def T(self) -> float:
        return float(self.t_values[-1])

    @property
    def dt(self) -> float:
        return self.T / (self.size - 1)

    @property
    def size(self) -> int:
        return int(self.t_values.size)

    def __len__(self):
        return self.size

    def matches(self, other: Grid, rtol: float = GRID_RTOL) -> bool:
        if self is other:
            return True
        if self.size != other.size:
            return False
        scale = max(self.T, other.T)
        return bool(np.max(np.abs(self.t_values - other.t_values)) <= rtol * scale)

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return self.matches(other)

    def __hash__(self):
        return hash((self.size, round(self.T, 9)))

    def __repr__(self):
        return f"Grid(G={self.size}, T={self.T!r})"


@dataclass(frozen=True, eq=False)
class FunctionalSample:
    """One function observed on a grid."""

    values: np.ndarray
    grid: Grid

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.shape != (self.grid.size,):
            raise LengthMismatch(
                f"sample has shape {v.shape}, grid has {self.grid.size} points"
            )
        if not np.all(np.isfinite(v)):
            raise NonFiniteValue("sample values must be finite")
        object.__setattr__(self, "values", _frozen(v))


@dataclass(frozen=True, eq=False)
class DataSet:
    """A labelled set of ``N`` functional samples sharing one grid.

    ``values`` is an ``(N, G)`` array, row ``n`` holding sample ``n``.
    """

    id: Hashable
    values: np.ndarray
    grid: Grid

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.ndim != 2:
            raise LengthMismatch(f"data set values must be 2-D (N, G), got ndim={v.ndim}")
        if v.shape[1] != self.grid.size:
            raise GridMismatch(
                f"data set {self.id!r} has {v.shape[1]} columns, grid has {self.grid.size}"
            )
        if v.shape[0] < 2:
            raise InvalidParameter(f"data set {self.id!r} needs at least 2 samples")
        if not np.all(np.isfinite(v)):
            raise NonFiniteValue(f"data set {self.id!r} contains non-finite values")
        object.__setattr__(self, "values", _frozen(v))

    @classmethod
    def from_samples(cls, id, samples: Sequence[FunctionalSample]) -> DataSet:
        if not samples:
            raise EmptyInput("no samples given")
        grid = samples[0].grid
        for s in samples[1:]:
            if not s.grid.matches(grid):
                raise GridMismatch(f"samples of data set {id!r} are on different grids")
        return cls(id, np.stack([s.values for s in samples]), grid)

    @property
    def N(self) -> int:
        return int(self.values.shape[0])

    def __len__(self):
        return self.N

    def sample(self, n: int) -> FunctionalSample:
        return FunctionalSample(self.values[n], self.grid)

    @property
    def samples(self) -> list[FunctionalSample]:
        return [self.sample(n) for n in range(self.N)]


def validate_common_grid(datasets: Sequence[DataSet]) -> Grid:
    """Return the grid shared by all data sets.

    Raises:
        EmptyInput: if ``datasets`` is empty.
        GridMismatch: if any data set sits on a different grid.
    """
    if len(datasets) == 0:
        raise EmptyInput("no data sets given")
    grid = datasets[0].grid
    for ds in datasets[1:]:
        if not ds.grid.matches(grid):
            raise GridMismatch(
                f"data set {ds.id!r} is on {ds.grid!r}, expected {grid!r}"
            )
    return grid


@dataclass(frozen=True)
class Partition:
    """Assignment of data-set labels to clusters ``0..k-1``.

    Cluster indices are canonical: numbered in order of first appearance
    when the labels are listed in ``assignment`` order.
    """

    assignment: Mapping[Hashable, int] = field(default_factory=dict)

    def __post_init__(self):
        relabel: dict[int, int] = {}
        canon = {}
        for label, c in self.assignment.items():
            if c not in relabel:
                relabel[c] = len(relabel)
            canon[label] = relabel[c]
        object.__setattr__(self, "assignment", canon)

    @classmethod
    def from_clusters(cls, clusters: Iterable[Iterable[Hashable]], order=None) -> Partition:
        """Build from a list of clusters; ``order`` fixes the label order."""
        index = {}
        for c, members in enumerate(clusters):
            for label in members:
                if label in index:
                    raise InvalidParameter(f"label {label!r} appears in two clusters")
                index[label] = c
        if order is not None:
            order = list(order)
            if set(order) != set(index) or len(order) != len(index):
                raise InvalidParameter("order must list every clustered label once")
            index = {label: index[label] for label in order}
        return cls(index)

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable], keys: Sequence[Hashable]) -> Partition:
        """Group ``labels`` by equal ``keys`` (e.g. the generating parameter)."""
        if len(labels) != len(keys):
            raise LengthMismatch("labels and keys differ in length")
        first: dict = {}
        return cls({lab: first.setdefault(k, len(first)) for lab, k in zip(labels, keys)})

    @property
    def labels(self) -> list:
        return list(self.assignment)

    @property
    def k(self) -> int:
        return len(set(self.assignment.values()))

    def clusters(self) -> list[tuple]:
        out: list[list] = [[] for _ in range(self.k)]
        for label, c in self.assignment.items():
            out[c].append(label)
        return [tuple(c) for c in out]

    def __getitem__(self, label):
        return self.assignment[label]

    def __len__(self):
        return len(self.assignment)

    def same_cluster(self, a, b) -> bool:
        return self.assignment[a] == self.assignment[b]

    def equivalent(self, other: Partition) -> bool:
        """True when both partitions induce the same equivalence relation."""
        if set(self.assignment) != set(other.assignment):
            return False
        return {frozenset(c) for c in self.clusters()} == {
            frozenset(c) for c in other.clusters()
        }
