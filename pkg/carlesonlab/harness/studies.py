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
"""Weight class studies and the weighted variational inequality for Littlewood-Paley families."""

import logging
import math
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..fourier import Signal
from ..lepingle import lepingle_ratio, lp_family, sharp_function_check
from ..weights import (
    Weight,
    a_infinity_exponent,
    ap_constant,
    ap_constant_exhaustive,
    average,
    doubling_exponent,
    dyadic_sharp,
    maximal,
    weighted_lp_norm,
)
from .experiment import ExperimentConfig
from .families import make_signal, make_weight, trial_rng
from .report import ExperimentReport
from .trials import run_trials

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 256
DRIFT_LIMIT = 0.2
SINGLE_SCALE_TOLERANCE = 1e-9


def _weight_spec(a: float) -> Dict[str, Any]:
    return {"kind": "power", "a": a} if a else {"kind": "lebesgue"}


def drift(first: float, last: float) -> float:
    """Relative change from `first` to `last`; zero when both vanish."""
    if first == 0:
        return 0.0 if last == 0 else math.inf
    return abs(last - first) / first


def _sharp_trial(family: Mapping[str, Any], p: float, w: Weight, seed: int,
                 trial: int) -> Tuple[float, float]:
    f = make_signal(family, w.size, trial_rng(seed, trial))
    norm = weighted_lp_norm(f, p, w)
    if norm == 0:
        return math.nan, math.nan
    control = weighted_lp_norm(dyadic_sharp(f).samples + abs(average(f)), p, w)
    bounded = weighted_lp_norm(maximal(f, 1.0, "weighted", w), p, w) / norm
    return norm / control, bounded


def sharp_equivalence(family: Mapping[str, Any], p: float, w: Weight, trials: int, seed: int,
                      progress: Optional[tqdm] = None) -> Tuple[float, float]:
    """Window constant c with ‖f‖ / ‖f^# + |avg f|‖ in [1/c, c] in L^p(w) over the family,
    and the largest ratio ‖M_{1,w} f‖ / ‖f‖."""
    results = np.array(
        run_trials(_sharp_trial, [(family, p, w, seed, trial) for trial in range(trials)],
                   progress))
    ratios = results[:, 0][~np.isnan(results[:, 0])]
    if ratios.shape[0] == 0:
        return math.nan, math.nan
    window = float(max(ratios.max(), 1 / ratios.min()))
    return window, float(np.nanmax(results[:, 1]))


def apconst_report(config: ExperimentConfig, progress: Optional[tqdm] = None) -> ExperimentReport:
    """A_p constant, doubling and A_∞ exponents of every weight in the grid, with the
    sharp-function equivalence window and the weighted maximal function check."""
    report = ExperimentReport("apconst", config.as_dict(), config.digest(), config.seed)
    report.annotations.update(config.annotations())
    rows = []
    windows: Dict[float, List[float]] = {}
    series: Dict[str, List[Tuple[int, float]]] = {}
    for a in config.weight_grid:
        windows[a] = []
        for n in config.n_grid:
            w = make_weight(_weight_spec(a), n)
            value = ap_constant(w, config.p)
            exhaustive = ap_constant_exhaustive(w, config.p) if n <= EXHAUSTIVE_LIMIT else None
            window, maximal_ratio = sharp_equivalence(config.family, config.p, w, config.trials,
                                                      config.seed, progress)
            windows[a].append(window)
            rows.append([a, n, value, exhaustive, doubling_exponent(w), a_infinity_exponent(w),
                         window, maximal_ratio])
            series.setdefault(f"a={a}", []).append((n, value))
            if exhaustive is not None:
                report.monitor(f"ap_dyadic_within_2_a={a}_n={n}", exhaustive / value, 2.0)
            logger.info(f"a={a}, N={n}: [w]_A{config.p} = {value:.4f}")
        if len(config.n_grid) > 1:
            report.monitor(f"sharp_window_drift_a={a}", drift(windows[a][0], windows[a][-1]),
                           DRIFT_LIMIT)

    report.add_table(
        "weights",
        ["a", "n", "ap", "ap_exhaustive", "doubling", "a_infinity", "sharp_window",
         "maximal_ratio"], rows)
    report.add_plot(f"A_{config.p} constant", "N", "[w]_Ap", series, log_y=False)
    return report


def _lepingle_trial(family: Mapping[str, Any], constant: float, weights: Sequence[Weight],
                    r_grid: Sequence[float], p_grid: Sequence[float], r: float, seed: int,
                    trial: int) -> Tuple[List[float], float]:
    n = weights[0].size
    pieces = lp_family(make_signal(family, n, trial_rng(seed, trial)), constant)
    ratios = [lepingle_ratio(pieces, r_value, p, w)
              for w in weights for r_value in r_grid for p in p_grid]
    return ratios, sharp_function_check(pieces, r).constant


def single_scale_ratio(n: int, constant: float, r: float, p: float, w: Weight) -> float:
    """Ratio for the family of a pure tone at frequency N/4, which occupies a single band."""
    return lepingle_ratio(lp_family(Signal.tone(n // 4, n), constant), r, p, w)


def lepingle_report(config: ExperimentConfig, progress: Optional[tqdm] = None) -> ExperimentReport:
    """Corpus maxima of the Lépingle ratio per (N, a, r, p) and their drift across N."""
    report = ExperimentReport("lepingle", config.as_dict(), config.digest(), config.seed)
    report.annotations.update(config.annotations())
    keys = [(a, r, p) for a in config.weight_grid for r in config.r_grid for p in config.p_grid]
    maxima: Dict[Tuple[float, float, float], List[float]] = {key: [] for key in keys}
    rows = []
    sharp_rows = []
    for n in config.n_grid:
        weights = [make_weight(_weight_spec(a), n) for a in config.weight_grid]
        results = run_trials(_lepingle_trial,
                             [(config.family, config.lp_constant, weights, config.r_grid,
                               config.p_grid, config.r, config.seed, trial)
                              for trial in range(config.trials)], progress)
        corpus = np.array([ratios for ratios, _ in results])
        for key, column in zip(keys, corpus.T):
            maxima[key].append(float(column.max()))
            rows.append([n, *key, maxima[key][-1]])
        sharp = max(constant for _, constant in results)
        sharp_rows.append([n, config.r, sharp])
        report.monitor(f"sharp_constant_finite_n={n}", sharp, ok=math.isfinite(sharp))

        single = single_scale_ratio(n, config.lp_constant, config.r, config.p, weights[0])
        report.monitor(f"single_scale_n={n}", abs(single - 1), SINGLE_SCALE_TOLERANCE)
        logger.info(f"Lepingle ratios at N={n}: corpus maximum {corpus.max():.4f}")

    report.add_table("maxima", ["n", "a", "r", "p", "max_ratio"], rows)
    report.add_table("sharp", ["n", "r", "constant"], sharp_rows)
    for key, values in maxima.items():
        name = "a={}_r={}_p={}".format(*key)
        report.monitor(f"finite_{name}", max(values), ok=all(map(math.isfinite, values)))
        if len(values) > 1:
            report.monitor(f"drift_{name}", drift(values[0], values[-1]), DRIFT_LIMIT)
    report.add_plot("Largest Lépingle ratio", "N", "max ratio",
                    {"a={}, r={}, p={}".format(*key): list(zip(config.n_grid, values))
                     for key, values in maxima.items()}, log_y=False)
    return report
