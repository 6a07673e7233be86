"""End-to-end clustering of data sets by law."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .bounds import DEFAULT_C, DEFAULT_DELTA_GRID, ThresholdConfig, minimize_threshold
from .dendrogram import DendrogramModel, complete_linkage, cut_at_threshold
from .directions import DirectionSet, sample_directions
from .distance import DistanceMatrix, distance_matrix
from .errors import TooFewSets
from .types import DataSet, Partition, validate_common_grid


@dataclass(frozen=True, eq=False)
class ClusterResult:
    partition: Partition
    gamma_star: float
    delta: float
    matrix: DistanceMatrix
    dendrogram: DendrogramModel
    directions: DirectionSet
    config: ThresholdConfig


def default_alpha(N: int) -> float:
    return math.sqrt(1.0 / N)


def cluster_datasets(
    datasets: Sequence[DataSet],
    M: int | None = None,
    seed: int = 0,
    alpha: float | None = None,
    C: float = DEFAULT_C,
    delta_grid_size: int = DEFAULT_DELTA_GRID,
    directions: DirectionSet | None = None,
    workers: int | None = None,
) -> ClusterResult:
    """Partition ``datasets`` into groups believed to share a law.

    Args:
        datasets: at least two data sets on a common grid.
        M: number of Brownian-bridge directions; defaults to ``10 * N``.
        seed: master seed of the directions.
        alpha: level; defaults to ``sqrt(1/N)``.
        C: DKW constant in the threshold.
        delta_grid_size: resolution of the delta scan.
        directions: reuse these directions instead of drawing new ones.
        workers: thread count for the pairwise distances.

    ``N`` is the smallest sample size among the data sets.
    """
    if len(datasets) < 2:
        raise TooFewSets(f"need at least 2 data sets, got {len(datasets)}")
    grid = validate_common_grid(datasets)
    N = min(ds.N for ds in datasets)
    if alpha is None:
        alpha = default_alpha(N)
    if directions is None:
        directions = sample_directions(grid, 10 * N if M is None else M, seed)
    matrix = distance_matrix(datasets, directions, workers=workers)
    config = ThresholdConfig(
        alpha=alpha,
        N=N,
        M=directions.M,
        V_star=matrix.max_variance,
        C=C,
        delta_grid_size=delta_grid_size,
    )
    thr = minimize_threshold(config)
    dendro = complete_linkage(matrix)
    return ClusterResult(
        partition=cut_at_threshold(dendro, thr.gamma),
        gamma_star=thr.gamma,
        delta=thr.delta,
        matrix=matrix,
        dendrogram=dendro,
        directions=directions,
        config=config,
    )
