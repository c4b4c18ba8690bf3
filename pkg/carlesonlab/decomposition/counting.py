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
"""Counting functions of tree tops."""

import logging
from typing import List, NamedTuple, Sequence, Union

import numpy as np

from ..errors import ExponentError
from ..fourier import Signal, check_grid_size, grid_points
from ..phaseplane import Top, Tree
from ..weights import DyadicInterval, Weight, weighted_lp_norm

logger = logging.getLogger(__name__)


def dilated_mask(interval: DyadicInterval, factor: float, n: int) -> np.ndarray:
    """Grid points of the concentric dilate factor · I on the torus."""
    length = interval.length * factor
    if length >= 1:
        return np.ones(n, dtype=bool)
    start = interval.center - length / 2
    offset = np.mod(grid_points(n) - start, 1.0)
    # Rounding guard for points sitting exactly on the left endpoint.
    offset = np.where(np.isclose(offset, 1.0, rtol=0, atol=1e-12), 0.0, offset)
    return offset < length - 1e-12


def _top_of(tree: Union[Tree, Top]) -> Top:
    return tree.top if isinstance(tree, Tree) else tree


def counting_function(trees: Sequence[Union[Tree, Top]], k: int, n: int) -> Signal:
    """N^{[k]} = Σ_T 1_{2^k I_T}, with the dilates periodized on the torus."""
    check_grid_size(n)
    if k < 0:
        raise ExponentError("k", k, "k >= 0")
    counts = np.zeros(n)
    for tree in trees:
        counts += dilated_mask(_top_of(tree).interval, 2.0**k, n)
    return Signal(counts)


class TopIntervalGrowth(NamedTuple):
    """‖N^{[k]}‖_{L^p(w)} for k = 0, 1, ... and the fitted exponent β of 2^{βk}."""
    norms: List[float]
    beta: float


def top_interval_growth(trees: Sequence[Union[Tree, Top]], w: Weight, p: float = 1.0,
                        shells: int = 4) -> TopIntervalGrowth:
    norms = [weighted_lp_norm(counting_function(trees, k, w.size), p, w) for k in range(shells)]
    positive = [(k, value) for k, value in enumerate(norms) if value > 0]
    beta = 0.0
    if len(positive) >= 2:
        ks, values = zip(*positive)
        beta = float(np.polyfit(ks, np.log2(values), 1)[0])
    logger.debug(f"Top interval growth: norms {norms}, β ≈ {beta:.3f}")
    return TopIntervalGrowth(norms, beta)


def counting_tail_slope(trees: Sequence[Union[Tree, Top]], w: Weight) -> float:
    """Fitted slope of log w({N^{[0]} > λ}) against log λ over the attained levels λ >= 1."""
    counts = counting_function(trees, 0, w.size).samples
    levels = np.unique(counts[counts >= 1])
    lambdas = []
    masses = []
    for level in levels:
        # λ just below each attained value.
        mass = w.mass_of(counts >= level)
        if mass > 0:
            lambdas.append(level)
            masses.append(mass)
    if len(lambdas) < 2:
        return 0.0
    return float(np.polyfit(np.log(lambdas), np.log(masses), 1)[0])
