"""Concentration bounds for the averaged KS distance and the cut threshold.

The cut threshold is the infimum over ``delta in (0, alpha)`` of

    sqrt(2 V* log(2/delta) / M) + sqrt(log(C / (alpha - delta)) / N)
        + 7 log(2/delta) / (3 (M - 1))

where ``V*`` is the largest per-pair variance of the per-direction KS
distances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import HypothesisViolated, InvalidConfig, InvalidDelta, InvalidM

DEFAULT_C = math.e
DEFAULT_DELTA_GRID = 512
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def theorem1_bound(gamma: float, N: int, M: int, C: float = DEFAULT_C) -> float:
    """Hoeffding/DKW tail bound on ``P(|D_hat - D| >= gamma)``.

    Not clamped to 1; callers comparing against frequencies should clamp.
    """
    g2 = gamma * gamma
    return (
        2.0 * math.exp(-M * g2 / 2.0)
        + 2.0 * math.exp(-M * g2 / 32.0)
        + 2.0 * C * math.exp(-N * g2 / 16.0)
    )


def _check_delta(delta):
    if not 0.0 < delta < 1.0:
        raise InvalidDelta(f"delta must lie in (0, 1), got {delta!r}")


def epsilon_delta(delta: float, M: int) -> float:
    _check_delta(delta)
    if M < 2:
        raise InvalidM(f"M must be at least 2, got {M}")
    return 7.0 * math.log(2.0 / delta) / (3.0 * (M - 1))


def gamma_big(delta: float, M: int, V: float) -> float:
    """Variance term ``sqrt(2 V log(2/delta) / M)``."""
    _check_delta(delta)
    return math.sqrt(2.0 * V * math.log(2.0 / delta) / M)


def bernstein_bound(gamma: float, delta: float, N: int, M: int, C: float = DEFAULT_C) -> float:
    """Empirical-Bernstein bound ``C exp(-N (gamma - eps)^2) + delta``.

    Valid under equal laws and only when ``epsilon_delta(delta, M) < gamma``.
    """
    eps = epsilon_delta(delta, M)
    if eps >= gamma:
        raise HypothesisViolated(f"epsilon(delta)={eps:.6g} is not below gamma={gamma:.6g}")
    return C * math.exp(-N * (gamma - eps) ** 2) + delta


@dataclass(frozen=True)
class ThresholdConfig:
    """Inputs of the threshold search.

    Attributes:
        alpha: level, in (0, 1).
        N: smallest sample size across the data sets.
        M: number of directions.
        V_star: largest empirical variance over all pairs.
        C: DKW constant, at least 2.
        delta_grid_size: points in the log-spaced delta scan.
    """

    alpha: float
    N: int
    M: int
    V_star: float
    C: float = DEFAULT_C
    delta_grid_size: int = DEFAULT_DELTA_GRID

    def __post_init__(self):
        problems = []
        if not 0.0 < self.alpha < 1.0:
            problems.append(f"alpha={self.alpha!r} not in (0, 1)")
        if not self.C >= 2.0:
            problems.append(f"C={self.C!r} below 2")
        if self.delta_grid_size < 16:
            problems.append(f"delta_grid_size={self.delta_grid_size} below 16")
        if self.M < 2:
            problems.append(f"M={self.M} below 2")
        if self.N < 2:
            problems.append(f"N={self.N} below 2")
        if not self.V_star >= 0.0:
            problems.append(f"V_star={self.V_star!r} negative")
        if problems:
            raise InvalidConfig("; ".join(problems))


def threshold_objective(delta, config: ThresholdConfig):
    """Sum of the three threshold terms at ``delta`` (scalar or array)."""
    d = np.asarray(delta, dtype=np.float64)
    log2d = np.log(2.0 / d)
    out = (
        np.sqrt(2.0 * config.V_star * log2d / config.M)
        + np.sqrt(np.log(config.C / (config.alpha - d)) / config.N)
        + 7.0 * log2d / (3.0 * (config.M - 1))
    )
    return out if out.ndim else float(out)


def threshold_terms(delta: float, config: ThresholdConfig) -> tuple[float, float, float]:
    return (
        gamma_big(delta, config.M, config.V_star),
        math.sqrt(math.log(config.C / (config.alpha - delta)) / config.N),
        epsilon_delta(delta, config.M),
    )


def delta_bounds(alpha: float) -> tuple[float, float]:
    return alpha * 1e-6, alpha * (1.0 - 1e-6)


def _golden_section(f, a, b, tol=1e-14, max_iter=200):
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if abs(b - a) <= tol * max(abs(a), abs(b)):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


@dataclass(frozen=True)
class ThresholdResult:
    gamma: float
    delta: float


def minimize_threshold(config: ThresholdConfig) -> ThresholdResult:
    """Search ``delta`` on a log-spaced grid, then golden-section refine in
    the cell around the best grid point."""
    lo, hi = delta_bounds(config.alpha)
    deltas = np.geomspace(lo, hi, config.delta_grid_size)
    values = threshold_objective(deltas, config)
    i = int(np.argmin(values))
    best_delta, best = float(deltas[i]), float(values[i])

    a = deltas[max(i - 1, 0)]
    b = deltas[min(i + 1, deltas.size - 1)]
    d, v = _golden_section(lambda x: threshold_objective(x, config), float(a), float(b))
    if v < best:
        best_delta, best = d, v
    return ThresholdResult(best, best_delta)


def gamma_star(config: ThresholdConfig) -> float:
    return minimize_threshold(config).gamma
