"""Kolmogorov-Smirnov distances between projected data sets."""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Hashable, Sequence

import numba
import numpy as np

from .directions import DirectionSet
from .errors import DirectionCountMismatch, EmptyInput, InvalidParameter, TooFewSets
from .projection import ProjectionSet, project_set
from .types import DataSet, validate_common_grid


class ECDF:
    """Right-continuous empirical CDF ``F(t) = #{x_i <= t} / n``."""

    def __init__(self, values):
        x = np.sort(np.asarray(values, dtype=np.float64).ravel())
        if x.size == 0:
            raise EmptyInput("ECDF of an empty sample")
        self.x = x
        self.n = x.size

    def __call__(self, t):
        return np.searchsorted(self.x, t, side="right") / self.n


def ecdf(values) -> ECDF:
    return ECDF(values)


def ks_two_sample(x, y) -> float:
    """Exact ``sup_t |F_x(t) - F_y(t)|``.

    Both ECDFs are evaluated at every distinct pooled value, after all the
    jumps located there, which is where the supremum is attained. Counts are
    compared as integers so equal inputs give exactly 0.
    """
    x = np.sort(np.asarray(x, dtype=np.float64).ravel())
    y = np.sort(np.asarray(y, dtype=np.float64).ravel())
    nx, ny = x.size, y.size
    if nx == 0 or ny == 0:
        raise EmptyInput("KS distance needs two nonempty samples")
    z = np.unique(np.concatenate([x, y]))
    cx = np.searchsorted(x, z, side="right")
    cy = np.searchsorted(y, z, side="right")
    return int(np.max(np.abs(cx * ny - cy * nx))) / (nx * ny)


@numba.njit(cache=True, nogil=True)
def _ks_sorted_rows(us, vs):
    """Row-wise KS distances between ``(M, Nu)`` and ``(M, Nv)`` arrays whose
    rows are already sorted ascending (one merge-scan per row)."""
    M, nu = us.shape
    nv = vs.shape[1]
    out = np.empty(M)
    for m in range(M):
        u = us[m]
        v = vs[m]
        i = 0
        j = 0
        best = 0
        while i < nu or j < nv:
            if j == nv or (i < nu and u[i] <= v[j]):
                z = u[i]
            else:
                z = v[j]
            # step past every point tied at z before comparing
            while i < nu and u[i] == z:
                i += 1
            while j < nv and v[j] == z:
                j += 1
            gap = abs(i * nv - j * nu)
            if gap > best:
                best = gap
        out[m] = best / (nu * nv)
    return out


def _sorted_rows(values: np.ndarray) -> np.ndarray:
    return np.sort(np.ascontiguousarray(values.T), axis=1)


def ks_columns(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Column-wise KS distances between ``(Nu, M)`` and ``(Nv, M)`` arrays.

    Vectorized form of :func:`ks_two_sample`: entry ``m`` of the result is
    ``ks_two_sample(u[:, m], v[:, m])``.
    """
    return _ks_sorted_rows(_sorted_rows(np.asarray(u, float)), _sorted_rows(np.asarray(v, float)))


@dataclass(frozen=True, eq=False)
class PairDistance:
    """Averaged KS distance between two data sets over ``M`` directions.

    Attributes:
        mean: average of ``per_direction``.
        variance: ``1/(M-1)``-normalized sample variance of ``per_direction``
            (0 when ``M == 1``).
        per_direction: the ``M`` KS distances, one per direction.
    """

    mean: float
    variance: float
    per_direction: np.ndarray

    @classmethod
    def from_per_direction(cls, per_direction) -> PairDistance:
        d = np.asarray(per_direction, dtype=np.float64)
        var = float(d.var(ddof=1)) if d.size > 1 else 0.0
        return cls(float(d.mean()), var, d)

    @property
    def M(self) -> int:
        return int(self.per_direction.size)


def pair_distance(proj_u: ProjectionSet, proj_v: ProjectionSet) -> PairDistance:
    if proj_u.M != proj_v.M:
        raise DirectionCountMismatch(
            f"{proj_u.set_id!r} has {proj_u.M} directions, {proj_v.set_id!r} has {proj_v.M}"
        )
    return PairDistance.from_per_direction(ks_columns(proj_u.values, proj_v.values))


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric matrix of averaged distances and their per-pair variances."""

    labels: tuple
    dist: np.ndarray
    var: np.ndarray

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)

    def __getitem__(self, key):
        a, b = key
        return float(self.dist[self.index(a), self.index(b)])

    @property
    def max_variance(self) -> float:
        """Largest per-pair variance over all off-diagonal pairs."""
        iu = np.triu_indices(self.size, k=1)
        return float(self.var[iu].max())

    def to_csv(self, path, which: str = "dist") -> None:
        """Write ``dist`` or ``var`` with a header row of labels."""
        data = {"dist": self.dist, "var": self.var}[which]
        with Path(path).open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow([""] + [str(lab) for lab in self.labels])
            for lab, row in zip(self.labels, data):
                w.writerow([str(lab)] + [repr(float(x)) for x in row])

    @classmethod
    def from_csv(cls, path) -> DistanceMatrix:
        with Path(path).open(newline="") as fh:
            rows = list(csv.reader(fh))
        labels = tuple(rows[0][1:])
        dist = np.array([[float(x) for x in r[1:]] for r in rows[1:]])
        return cls(labels, dist, np.zeros_like(dist))


def distance_matrix(
    datasets: Sequence[DataSet],
    directions: DirectionSet,
    workers: int | None = None,
) -> DistanceMatrix:
    """Averaged KS distance for every unordered pair of data sets.

    Pairs are independent; with ``workers > 1`` they are spread over a thread
    pool. Each pair writes its own cells, so the result does not depend on
    scheduling.
    """
    if len(datasets) < 2:
        raise TooFewSets(f"need at least 2 data sets, got {len(datasets)}")
    grid = validate_common_grid(datasets)
    if not grid.matches(directions.grid):
        raise InvalidParameter("directions are not on the data grid")
    labels = tuple(ds.id for ds in datasets)
    if len(set(labels)) != len(labels):
        raise InvalidParameter("data set labels must be unique")

    projections = [project_set(ds, directions) for ds in datasets]
    presorted = [_sorted_rows(p.values) for p in projections]
    S = len(datasets)
    dist = np.zeros((S, S))
    var = np.zeros((S, S))
    pairs = list(combinations(range(S), 2))

    def fill(pair):
        i, j = pair
        pd = PairDistance.from_per_direction(_ks_sorted_rows(presorted[i], presorted[j]))
        dist[i, j] = dist[j, i] = pd.mean
        var[i, j] = var[j, i] = pd.variance

    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            list(pool.map(fill, pairs))
    else:
        for pair in pairs:
            fill(pair)
    return DistanceMatrix(labels, dist, var)


def kolmogorov_sf(x: float) -> float:
    """Survival function of the Kolmogorov distribution,
    ``2 * sum_{k>=1} (-1)^(k-1) exp(-2 k^2 x^2)``."""
    if x <= 0.02:
        return 1.0
    total = 0.0
    k = 1
    while True:
        term = math.exp(-2.0 * k * k * x * x)
        total += term if k % 2 else -term
        if term < 1e-12:
            break
        k += 1
    return min(1.0, max(0.0, 2.0 * total))


@dataclass(frozen=True)
class KSTestResult:
    statistic: float
    p_value: float


def ks_gof_test(x, y) -> KSTestResult:
    """Asymptotic two-sample KS test of equal laws for one direction.

    The statistic is ``sqrt(n_e) * D`` with effective size
    ``n_e = nx*ny/(nx+ny)``, which is ``N/2`` for equal sizes.
    """
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    d = ks_two_sample(x, y)
    n_eff = x.size * y.size / (x.size + y.size)
    stat = math.sqrt(n_eff) * d
    return KSTestResult(stat, kolmogorov_sf(stat))
