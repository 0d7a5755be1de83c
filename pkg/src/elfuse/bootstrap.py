"""Percentile bootstrap confidence intervals for the center.

Each resample redraws n1 primary and n2 secondary values with
replacement (independently; the samples are independent by model
assumption), recomputes the plug-in variance, and re-estimates the
center.  Intervals use the nearest-order-statistic quantile with index
ceil(q*B).  Resample index streams are counter-derived from the config
seed, so results are bit-identical however the surrounding work is
scheduled; the primary-sample index block is drawn first and therefore
does not depend on the secondary population or its size.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import _fast
from ._streams import STREAM_BOOT, STREAM_BOOT_REDRAW, derive_rng, resample_indices
from .fusion_estimator import GRID_POINTS, FusionProblem

logger = logging.getLogger(__name__)

DEFAULT_LEVELS: tuple[float, ...] = (0.80, 0.90, 0.95, 0.99)

ESTIMATORS: tuple[str, ...] = ("rspele", "mle")


@dataclass(frozen=True)
class BootstrapConfig:
    replicates: int = 200
    levels: tuple[float, ...] = DEFAULT_LEVELS
    seed: int = 0

    def __post_init__(self) -> None:
        if self.replicates < 2:
            raise ValueError(f"replicates must be >= 2, got {self.replicates}")
        for level in self.levels:
            if not 0.0 < level < 1.0:
                raise ValueError(f"levels must be in (0,1), got {level}")


@dataclass(frozen=True)
class Interval:
    lower: float
    upper: float

    @property
    def length(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


@dataclass(frozen=True)
class IntervalSet:
    intervals: dict[float, Interval]
    redraw_count: int

    def __getitem__(self, level: float) -> Interval:
        return self.intervals[level]


def quantile_index(q: float, b: int) -> int:
    """1-based nearest-order-statistic index ceil(q*b), snapped against
    float noise (0.9*200 must give 180, not 181) and clamped to [1, b]."""
    idx = math.ceil(q * b - 1e-12)
    return min(max(idx, 1), b)


def percentile_intervals(estimates: np.ndarray, levels: tuple[float, ...]) -> dict[float, Interval]:
    est = np.sort(np.asarray(estimates, dtype=float))
    b = est.size
    out: dict[float, Interval] = {}
    for level in levels:
        lo = est[quantile_index((1.0 - level) / 2.0, b) - 1]
        hi = est[quantile_index((1.0 + level) / 2.0, b) - 1]
        out[level] = Interval(float(lo), float(hi))
    return out


def _resample_estimates(problem: FusionProblem, config: BootstrapConfig) -> tuple[np.ndarray, int]:
    """Center re-estimates for each resample, with failed rows redrawn."""
    n1, n2 = problem.x.size, problem.y.size
    b = config.replicates
    ix, iy = resample_indices(config.seed, (STREAM_BOOT,), b, n1, n2)
    out = np.empty(b)
    ok = np.empty(b, dtype=np.bool_)
    smoothed = problem.equation.variant == "smoothed"

    def run(ix_rows: np.ndarray, iy_rows: np.ndarray, out_v: np.ndarray, ok_v: np.ndarray) -> None:
        if smoothed:
            _fast.boot_smoothed(
                problem.x, problem.y, problem.equation.h, ix_rows, iy_rows,
                GRID_POINTS, out_v, ok_v,
            )
        else:
            _fast.boot_indicator(problem.x, problem.y, ix_rows, iy_rows, out_v, ok_v)

    run(ix, iy, out, ok)
    redraws = 0
    budget = 10 * b
    for row in np.flatnonzero(~ok):
        attempt = 0
        while not ok[row]:
            attempt += 1
            redraws += 1
            if redraws > budget:
                raise RuntimeError(
                    f"bootstrap resampling exceeded {budget} redraw attempts"
                )
            rng = derive_rng(config.seed, STREAM_BOOT_REDRAW, int(row), attempt)
            ix_r = rng.integers(0, n1, size=(1, n1))
            iy_r = rng.integers(0, n2, size=(1, n2))
            out_r = np.empty(1)
            ok_r = np.empty(1, dtype=np.bool_)
            run(ix_r, iy_r, out_r, ok_r)
            if ok_r[0]:
                out[row] = out_r[0]
                ok[row] = True
    if redraws:
        logger.debug("bootstrap redrew %d resamples (rate %.4f)", redraws, redraws / b)
    return out, redraws


def bootstrap_ci(problem: FusionProblem, estimator: str, config: BootstrapConfig) -> IntervalSet:
    """Percentile intervals for the selected estimator at each level."""
    if estimator not in ESTIMATORS:
        raise ValueError(f"estimator must be one of {ESTIMATORS}, got {estimator!r}")
    if estimator == "mle":
        ix, _ = resample_indices(
            config.seed, (STREAM_BOOT,), config.replicates, problem.x.size, problem.y.size
        )
        estimates = problem.x[ix].mean(axis=1)
        redraws = 0
    else:
        estimates, redraws = _resample_estimates(problem, config)
    return IntervalSet(percentile_intervals(estimates, config.levels), redraws)
