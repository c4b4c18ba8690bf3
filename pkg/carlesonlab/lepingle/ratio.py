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
"""Weighted variational norms of Littlewood-Paley families."""

import logging
import math
from typing import NamedTuple, Optional

import numpy as np

from ..fourier import Signal, check_variation_exponent, variation_along_axis
from ..weights import Weight, dyadic_sharp, maximal, weighted_lp_norm
from .family import LPFamily

logger = logging.getLogger(__name__)


def variational_field(family: LPFamily, r: float) -> Signal:
    """sup over N_0 < ... < N_K of (Σ_k |Σ_{N_{k-1} < j <= N_k} f_j(x)|^r)^{1/r} at every x."""
    check_variation_exponent(r)
    cumulative = np.concatenate([np.zeros((1, family.size)), np.cumsum(family.pieces, axis=0)])
    return Signal(variation_along_axis(cumulative, r))


def square_field(family: LPFamily, s: float) -> Signal:
    """(Σ_j |f_j(x)|^s)^{1/s}."""
    if len(family) == 0:
        return Signal(np.zeros(family.size))
    return Signal(np.sum(np.abs(family.pieces)**s, axis=0)**(1 / s))


def variational_lp_norm(family: LPFamily, r: float, p: float, w: Optional[Weight] = None) -> float:
    """L^p(w) norm of the pointwise r-variation of the partial sums of the family."""
    if r == 2:
        logger.debug("Variational norm at r = 2, outside the range of the variational inequality")
    return weighted_lp_norm(variational_field(family, r), p, w)


def lepingle_ratio(family: LPFamily, r: float, p: float, w: Optional[Weight] = None) -> float:
    """Variational norm over ‖(Σ_j |f_j|^s)^{1/s}‖_{L^p(w)} with s = min(r, 2).

    Zero for a family whose right side vanishes.
    """
    s = min(r, 2.0)
    denominator = weighted_lp_norm(square_field(family, s), p, w)
    if denominator == 0:
        logger.debug("Degenerate family: the square function vanishes")
        return 0.0
    return variational_lp_norm(family, r, p, w) / denominator


class SharpCheck(NamedTuple):
    """Largest pointwise ratio of (variational field)^# to M_t of the square field."""
    constant: float
    t: float


def sharp_function_check(family: LPFamily, r: float, t: float = 2.0) -> SharpCheck:
    sharp = dyadic_sharp(variational_field(family, r)).samples
    bound = maximal(square_field(family, 2.0), t).samples
    positive = bound > 0
    if not np.any(positive):
        return SharpCheck(0.0, t)
    if np.any(sharp[~positive] > 0):
        return SharpCheck(math.inf, t)
    return SharpCheck(float(np.max(sharp[positive] / bound[positive])), t)
