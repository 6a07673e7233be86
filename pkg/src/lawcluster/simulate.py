"""Monte Carlo studies on scaled Brownian bridges (SBB) and AR(1) paths."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Sequence

import numpy as np

from .bounds import DEFAULT_C, DEFAULT_DELTA_GRID
from .directions import bridge_paths
from .errors import InvalidConfig, InvalidParameter, LabelMismatch
from .pipeline import cluster_datasets, default_alpha
from .types import DataSet, Grid, Partition

MODELS = ("sbb", "ar")
STUDY_THETAS = {
    "sbb": (1.0, 1.0, 2.0, 2.0, 2.0, 4.0, 4.0),
    "ar": (0.99, 0.99, 0.66, 0.66, 0.66, 0.33, 0.33),
}
STUDY_N_VALUES = (40, 60, 80, 100, 120, 140, 160)
STUDY_SIGMA_VALUES = (10, 30, 50)
STUDY_GRID_POINTS = 80


def gen_sbb(theta: float, N: int, grid: Grid, rng: np.random.Generator, id="sbb") -> DataSet:
    """``N`` Brownian bridges on ``grid``, each scaled by ``theta``."""
    if N < 1:
        raise InvalidParameter(f"N must be positive, got {N}")
    return DataSet(id, theta * bridge_paths(grid, N, rng), grid)


def ar_paths(theta_prime: float, N: int, length: int, rng: np.random.Generator) -> np.ndarray:
    """``(N, length)`` AR(1) paths ``Y(t) = theta' Y(t-1) + xi_t``, ``Y(0) = xi_0``."""
    xi = rng.standard_normal((N, length))
    y = np.empty_like(xi)
    y[:, 0] = xi[:, 0]
    for t in range(1, length):
        y[:, t] = theta_prime * y[:, t - 1] + xi[:, t]
    return y


def gen_ar(
    theta_prime: float,
    N: int,
    length: int,
    rng: np.random.Generator,
    id="ar",
    allow_zero: bool = False,
) -> DataSet:
    """``N`` AR(1) paths with standard normal innovations.

    Time index ``0..length-1`` is laid on the grid ``Grid.uniform(length)``
    over [0, 1]. ``allow_zero`` admits ``theta_prime == 0`` (white noise),
    which is only useful for testing.
    """
    lo_ok = theta_prime >= 0.0 if allow_zero else theta_prime > 0.0
    if not (lo_ok and theta_prime < 1.0):
        raise InvalidParameter(f"theta' must lie in (0, 1), got {theta_prime!r}")
    if N < 1 or length < 2:
        raise InvalidParameter(f"need N >= 1 and length >= 2, got N={N}, length={length}")
    return DataSet(id, ar_paths(theta_prime, N, length, rng), Grid.uniform(length))


def truth_partition(labels: Sequence, thetas: Sequence[float]) -> Partition:
    return Partition.from_labels(labels, thetas)


@dataclass(frozen=True)
class PartitionMetrics:
    """``type1``: share of different-law pairs put together.
    ``type2``: share of same-law pairs split apart."""

    exact: bool
    type1: float
    type2: float


def partition_metrics(estimated: Partition, truth: Partition) -> PartitionMetrics:
    if set(estimated.labels) != set(truth.labels) or len(estimated) != len(truth):
        raise LabelMismatch("partitions cover different labels")
    same = diff = merged = split = 0
    for a, b in combinations(truth.labels, 2):
        together = estimated.same_cluster(a, b)
        if truth.same_cluster(a, b):
            same += 1
            split += not together
        else:
            diff += 1
            merged += together
    return PartitionMetrics(
        exact=(merged == 0 and split == 0),
        type1=merged / diff if diff else 0.0,
        type2=split / same if same else 0.0,
    )


@dataclass(frozen=True, eq=False)
class ReplicateResult:
    partition: Partition
    truth: Partition
    metrics: PartitionMetrics
    gamma_star: float


def replicate_seed(seed: int, model: str, N: int, sigma: int, rep: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(seed, spawn_key=(MODELS.index(model), N, sigma, rep))


def generate_sets(
    model: str,
    thetas: Sequence[float],
    N: int,
    seed,
    grid_points: int = STUDY_GRID_POINTS,
) -> tuple[list[DataSet], int]:
    """Data sets for one replicate plus the seed for its directions.

    ``seed`` is an int or a ``SeedSequence``; each data set gets its own
    child stream.
    """
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    children = ss.spawn(len(thetas) + 1)
    grid = Grid.uniform(grid_points)
    sets = []
    for i, (theta, child) in enumerate(zip(thetas, children)):
        rng = np.random.default_rng(child)
        label = f"u{i + 1}"
        if model == "sbb":
            sets.append(gen_sbb(theta, N, grid, rng, id=label))
        elif model == "ar":
            sets.append(gen_ar(theta, N, grid_points, rng, id=label))
        else:
            raise InvalidParameter(f"unknown model {model!r}")
    direction_seed = int(children[-1].generate_state(1, np.uint64)[0])
    return sets, direction_seed


def run_replicate(
    model: str,
    thetas: Sequence[float],
    N: int,
    M: int,
    alpha: float,
    seed,
    C: float = DEFAULT_C,
    grid_points: int = STUDY_GRID_POINTS,
    delta_grid_size: int = DEFAULT_DELTA_GRID,
) -> ReplicateResult:
    """Generate one replicate, cluster it and score it against the truth."""
    sets, direction_seed = generate_sets(model, thetas, N, seed, grid_points)
    result = cluster_datasets(
        sets, M=M, seed=direction_seed, alpha=alpha, C=C, delta_grid_size=delta_grid_size
    )
    truth = truth_partition([ds.id for ds in sets], thetas)
    return ReplicateResult(
        partition=result.partition,
        truth=truth,
        metrics=partition_metrics(result.partition, truth),
        gamma_star=result.gamma_star,
    )


@dataclass(frozen=True)
class ExperimentConfig:
    """A grid of Monte Carlo cells: one per ``(N, sigma)``.

    Each cell uses ``M = sigma * N`` directions and level ``sqrt(1/N)``
    unless ``alpha`` overrides it.
    """

    model: str
    thetas: tuple = ()
    N_values: tuple = STUDY_N_VALUES
    sigma_values: tuple = STUDY_SIGMA_VALUES
    replicates: int = 100
    grid_points: int = STUDY_GRID_POINTS
    seed: int = 0
    C: float = DEFAULT_C
    delta_grid_size: int = DEFAULT_DELTA_GRID
    alpha: float | None = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise InvalidConfig(f"model must be one of {MODELS}, got {self.model!r}")
        if not self.thetas:
            object.__setattr__(self, "thetas", STUDY_THETAS[self.model])
        object.__setattr__(self, "thetas", tuple(float(t) for t in self.thetas))
        object.__setattr__(self, "N_values", tuple(int(n) for n in self.N_values))
        object.__setattr__(self, "sigma_values", tuple(int(s) for s in self.sigma_values))
        if self.replicates < 1:
            raise InvalidConfig("replicates must be at least 1")
        if self.grid_points < 2:
            raise InvalidConfig("grid_points must be at least 2")
        if not self.N_values or any(n < 2 for n in self.N_values):
            raise InvalidConfig("N values must all be at least 2")
        if not self.sigma_values or any(s < 1 for s in self.sigma_values):
            raise InvalidConfig("sigma values must all be at least 1")
        if len(self.thetas) < 2:
            raise InvalidConfig("need at least two data sets (thetas)")

    def cell_alpha(self, N: int) -> float:
        return default_alpha(N) if self.alpha is None else self.alpha


@dataclass(frozen=True)
class ReportCell:
    N: int
    sigma: int
    proportion_correct: float
    type1: float
    type2: float
    replicates: int


@dataclass(frozen=True)
class ExperimentReport:
    model: str
    cells: tuple[ReportCell, ...] = field(default_factory=tuple)

    def cell(self, N: int, sigma: int) -> ReportCell:
        for c in self.cells:
            if c.N == N and c.sigma == sigma:
                return c
        raise KeyError((N, sigma))

    def to_csv(self, path=None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["model", "N", "sigma", "proportion_correct", "type1", "type2"])
        for c in self.cells:
            w.writerow(
                [self.model, c.N, c.sigma, repr(c.proportion_correct), repr(c.type1), repr(c.type2)]
            )
        text = buf.getvalue()
        if path is not None:
            Path(path).write_text(text)
        return text


def _run_task(args) -> PartitionMetrics:
    config, N, sigma, rep = args
    return run_replicate(
        config.model,
        config.thetas,
        N,
        sigma * N,
        config.cell_alpha(N),
        replicate_seed(config.seed, config.model, N, sigma, rep),
        C=config.C,
        grid_points=config.grid_points,
        delta_grid_size=config.delta_grid_size,
    ).metrics


def run_experiment(config: ExperimentConfig, workers: int | None = None, progress=None) -> ExperimentReport:
    """Run every ``(N, sigma)`` cell for ``config.replicates`` replicates.

    Replicate seeds depend only on ``(seed, model, N, sigma, replicate)``,
    so results are identical for any ``workers`` count. ``progress`` is an
    optional callable receiving ``(done, total)``.
    """
    cells = [(N, s) for N in config.N_values for s in config.sigma_values]
    tasks = [(config, N, s, r) for N, s in cells for r in range(config.replicates)]
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            metrics = []
            for m in pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))):
                metrics.append(m)
                if progress:
                    progress(len(metrics), len(tasks))
    else:
        metrics = []
        for t in tasks:
            metrics.append(_run_task(t))
            if progress:
                progress(len(metrics), len(tasks))

    R = config.replicates
    out = []
    for k, (N, s) in enumerate(cells):
        chunk = metrics[k * R : (k + 1) * R]
        out.append(
            ReportCell(
                N=N,
                sigma=s,
                proportion_correct=sum(m.exact for m in chunk) / R,
                type1=math.fsum(m.type1 for m in chunk) / R,
                type2=math.fsum(m.type2 for m in chunk) / R,
                replicates=R,
            )
        )
    return ExperimentReport(config.model, tuple(out))
