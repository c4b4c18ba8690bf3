# Copyright (C) 2026, the carlesonlab developers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Empirical operator norm ratios and the sweep over variation exponents."""

import logging
import math
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

import numpy as np
from tqdm import tqdm

from ..errors import ConfigError, DegenerateFamilyError
from ..fourier import (
    Signal,
    carleson_maximal,
    partial_sum,
    variational_partial_sums,
    variational_truncation,
)
from ..weights import Weight, weighted_lp_norm
from .experiment import ExperimentConfig
from .families import make_signal, make_weight, trial_rng
from .report import ExperimentReport
from .trials import run_trials

logger = logging.getLogger(__name__)


def operator_for(name: str, r: float = 4.0, partial_n: int = 8) -> Callable[[Signal], Signal]:
    """The pointwise operator selected by name; r = inf turns both variational operators into
    the maximal operator."""
    if name == "partial_sum":
        return lambda f: partial_sum(f, partial_n)
    if name == "maximal" or (name in ("variation", "truncation") and math.isinf(r)):
        return carleson_maximal
    if name == "variation":
        return lambda f: variational_partial_sums(f, r)
    if name == "truncation":
        return lambda f: variational_truncation(f, r)
    raise ConfigError(f"unknown operator {name}")


def _trial_ratio(operator: Callable[[Signal], Signal], p: float, w: Weight,
                 family: Mapping[str, Any], seed: int, trial: int) -> float:
    f = make_signal(family, w.size, trial_rng(seed, trial))
    denominator = weighted_lp_norm(f, p, w)
    if denominator == 0:
        return math.nan
    return weighted_lp_norm(operator(f), p, w) / denominator


def norm_ratios(operator: Callable[[Signal], Signal],
                p: float,
                w: Weight,
                family: Mapping[str, Any],
                trials: int,
                seed: int,
                progress: Optional[tqdm] = None) -> np.ndarray:
    """‖T f‖_{L^p(w)} / ‖f‖_{L^p(w)} for every trial signal.

    Raises:
        DegenerateFamilyError: Every signal of the family vanishes.
    """
    if trials < 1:
        raise ConfigError(f"trials = {trials} must be at least 1")
    ratios = np.array(
        run_trials(_trial_ratio, [(operator, p, w, family, seed, trial) for trial in range(trials)],
                   progress))
    if np.all(np.isnan(ratios)):
        raise DegenerateFamilyError(f"every signal of family {dict(family)} vanishes")
    return ratios


def _summary(ratios: np.ndarray) -> Dict[str, float]:
    kept = ratios[~np.isnan(ratios)]
    return {
        "max": float(kept.max()),
        "median": float(np.median(kept)),
        "mean": float(kept.mean()),
        "trials": int(kept.shape[0]),
    }


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least squares slope of log2 y against log2 x; NaN with fewer than two positive points."""
    points = [(x, y) for x, y in zip(xs, ys) if x > 0 and y > 0 and math.isfinite(y)]
    if len(points) < 2:
        return math.nan
    x, y = zip(*points)
    return float(np.polyfit(np.log2(x), np.log2(y), 1)[0])


def estimate_norm_ratio(operator: str,
                        p: float,
                        w: Weight,
                        family: Mapping[str, Any],
                        trials: int,
                        seed: int,
                        r: float = 4.0,
                        partial_n: int = 8,
                        config: Optional[ExperimentConfig] = None,
                        progress: Optional[tqdm] = None) -> ExperimentReport:
    """Distribution of the norm ratio of one operator over a seeded signal family."""
    config = config or ExperimentConfig(n=w.size, p=p, q=(1 + p) / 2, r=r, operator=operator,
                                        partial_n=partial_n, family=dict(family), trials=trials,
                                        seed=seed)
    ratios = norm_ratios(operator_for(operator, r, partial_n), p, w, family, trials, seed, progress)
    report = ExperimentReport(f"ratio-{operator}", config.as_dict(), config.digest(), seed)
    report.add_table("trials", ["trial", "ratio"], [[trial, float(value)]
                                                    for trial, value in enumerate(ratios)])
    report.summary.update(_summary(ratios))
    report.summary.update({"operator": operator, "p": p, "r": r, "n": w.size})
    report.annotations.update(config.annotations())
    logger.info(f"{operator} at N={w.size}, p={p}, r={r}: max ratio {report.summary['max']:.4f}")
    return report


def sweep_r(config: ExperimentConfig, progress: Optional[tqdm] = None) -> ExperimentReport:
    """Largest norm ratio for every (r, a, N) and the fitted growth slope against N.

    The r = inf column uses the maximal operator, which also gets its own column.

    Raises:
        ConfigError: The r or N grid holds fewer than two values.
    """
    if len(config.r_grid) < 2 or len(config.n_grid) < 2:
        raise ConfigError("the sweep needs at least two values of r and of N")
    operator = config.operator if config.operator in ("variation", "truncation") else "variation"
    columns: List[Any] = list(config.r_grid) + ["maximal"]
    report = ExperimentReport("sweep-r", config.as_dict(), config.digest(), config.seed)
    cells = []
    slopes = []
    for a in config.weight_grid:
        series = {}
        slope_row: List[Any] = [a]
        for column in columns:
            r = math.inf if column == "maximal" else float(column)
            maxima = []
            for n in config.n_grid:
                w = make_weight({"kind": "power" if a else "lebesgue", "a": a}, n)
                ratios = norm_ratios(operator_for(operator, r, config.partial_n), config.p, w,
                                     config.family, config.trials, config.seed, progress)
                maxima.append(float(np.nanmax(ratios)))
                cells.append([a, repr(r) if column != "maximal" else "maximal", n, maxima[-1]])
            slope = loglog_slope(config.n_grid, maxima)
            slope_row.append(slope)
            series[f"r={column}"] = list(zip(config.n_grid, maxima))
        slopes.append(slope_row)
        report.add_plot(f"Largest {operator} ratio, a={a}", "N", "max ratio", series)

    report.add_table("cells", ["a", "r", "n", "max_ratio"], cells)
    report.add_table("slopes", ["a"] + [f"r={c}" for c in columns], slopes)
    report.annotations.update(config.annotations())
    for row in slopes:
        # Columns 1 and -2 hold the smallest and the largest r of the grid.
        separation = row[1] - row[-2]
        report.summary[f"slope_separation_a={row[0]}"] = separation
        report.monitor(f"slope_separation_a={row[0]}", separation,
                       ok=math.isfinite(separation) and separation > 0)
    for a in config.weight_grid:
        for n in config.n_grid:
            maxima = [
                cell[3] for cell in cells
                if cell[0] == a and cell[2] == n and cell[1] not in ("maximal", "inf")
            ]
            ordered = all(later <= earlier * (1 + 1e-9)
                          for earlier, later in zip(maxima, maxima[1:]))
            report.monitor(f"ratio_nonincreasing_in_r_a={a}_n={n}", 0.0 if ordered else 1.0,
                           ok=ordered)
    logger.info(f"Sweep over r={config.r_grid}, a={config.weight_grid}, N={config.n_grid} done")
    return report
