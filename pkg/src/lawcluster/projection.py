"""Projection of functional samples onto directions (trapezoidal L2 inner product)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

import numpy as np

from .directions import DirectionSet
from .errors import GridMismatch, LengthMismatch
from .types import DataSet, FunctionalSample, Grid


def trapezoid_weights(grid: Grid) -> np.ndarray:
    w = np.full(grid.size, grid.dt)
    w[0] = w[-1] = 0.5 * grid.dt
    return w


def project(sample, direction, grid: Grid) -> float:
    """Trapezoid approximation of ``int_0^T h(t) Y(t) dt``.

    ``sample`` and ``direction`` may be arrays or :class:`FunctionalSample`.
    The integrand is formed as an elementwise product first, so swapping
    the two arguments gives the identical float.
    """
    y = sample.values if isinstance(sample, FunctionalSample) else np.asarray(sample, float)
    h = np.asarray(direction, dtype=np.float64)
    if y.shape != (grid.size,) or h.shape != (grid.size,):
        raise LengthMismatch(
            f"sample {y.shape}, direction {h.shape} and grid ({grid.size},) disagree"
        )
    return float(np.dot(trapezoid_weights(grid), y * h))


@dataclass(frozen=True, eq=False)
class ProjectionSet:
    """``(N, M)`` projections of one data set; column ``m`` is direction ``m``."""

    values: np.ndarray
    set_id: Hashable

    @property
    def N(self) -> int:
        return int(self.values.shape[0])

    @property
    def M(self) -> int:
        return int(self.values.shape[1])


def project_set(dataset: DataSet, directions: DirectionSet) -> ProjectionSet:
    if not dataset.grid.matches(directions.grid):
        raise GridMismatch(
            f"data set {dataset.id!r} on {dataset.grid!r}, directions on {directions.grid!r}"
        )
    weighted = directions.paths * trapezoid_weights(directions.grid)
    return ProjectionSet(dataset.values @ weighted.T, dataset.id)
