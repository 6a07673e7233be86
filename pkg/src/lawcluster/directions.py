"""Brownian-bridge random directions on a grid."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvalidCount
from .types import Grid


def wiener_paths(grid: Grid, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` Wiener paths on ``grid`` as an ``(n, G)`` array, ``W(0) = 0``."""
    steps = rng.standard_normal((n, grid.size - 1)) * np.sqrt(np.diff(grid.t_values))
    w = np.zeros((n, grid.size))
    np.cumsum(steps, axis=1, out=w[:, 1:])
    return w


def bridge_paths(grid: Grid, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` Brownian bridges ``W(t) - (t/T) W(T)``, pinned to 0 at both ends."""
    w = wiener_paths(grid, n, rng)
    b = w - np.outer(w[:, -1], grid.t_values / grid.T)
    # pin exactly rather than rely on t_{G-1}/T == 1 in floating point
    b[:, 0] = 0.0
    b[:, -1] = 0.0
    return b


def sample_wiener(grid: Grid, rng: np.random.Generator) -> np.ndarray:
    return wiener_paths(grid, 1, rng)[0]


def sample_brownian_bridge(grid: Grid, rng: np.random.Generator) -> np.ndarray:
    return bridge_paths(grid, 1, rng)[0]


def direction_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for direction ``index`` under master ``seed``.

    The stream depends only on ``(seed, index)``, so directions can be drawn
    in any order or in parallel and come out bitwise identical.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


@dataclass(frozen=True, eq=False)
class DirectionSet:
    """``M`` Brownian-bridge directions, one per row of ``paths``."""

    paths: np.ndarray
    seed: int
    grid: Grid

    def __post_init__(self):
        self.paths.setflags(write=False)

    @property
    def M(self) -> int:
        return int(self.paths.shape[0])

    def __len__(self):
        return self.M

    def to_csv(self, path) -> None:
        """One column per direction, first column the grid time."""
        path = Path(path)
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["t"] + [f"B{m}" for m in range(self.M)])
            for i, t in enumerate(self.grid.t_values):
                w.writerow([repr(float(t))] + [repr(float(x)) for x in self.paths[:, i]])


def sample_directions(grid: Grid, M: int, seed: int) -> DirectionSet:
    """Draw ``M`` Brownian bridges, direction ``m`` from stream ``(seed, m)``."""
    if M < 1:
        raise InvalidCount(f"need at least one direction, got M={M}")
    paths = np.empty((M, grid.size))
    for m in range(M):
        paths[m] = sample_brownian_bridge(grid, direction_rng(seed, m))
    return DirectionSet(paths, int(seed), grid)
