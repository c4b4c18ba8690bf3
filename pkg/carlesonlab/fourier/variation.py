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
"""Exact r-variation norms by dynamic programming.

For a sequence a_0, ..., a_M the r-variation is the supremum over strictly increasing index
sequences n_0 < n_1 < ... < n_K of

    |a_{n_0}|^r + Σ_k |a_{n_k} - a_{n_{k-1}}|^r

raised to the power 1/r. Without the initial term it is the oscillation of the sequence. The
supremum is attained by

    best[i] = max(seed_i, max_{j<i} best[j] + |a_i - a_j|^r)

with seed_i = |a_i|^r, or 0 in oscillation mode. For r = inf the norm with the initial term is
sup_n |a_n|, and the oscillation is the largest jump |a_i - a_j|. All routines work along the
first axis so that the pointwise operators evaluate every grid point at once.
"""

import math
from typing import Sequence, Union

import numpy as np

from ..errors import ExponentError


def check_variation_exponent(r: float) -> float:
    if math.isnan(r) or r < 1:
        raise ExponentError("r", r, "r >= 1 or r = inf")
    return r


def variation_along_axis(values: np.ndarray,
                         r: float,
                         include_initial: bool = False) -> np.ndarray:
    """r-variation of `values` along its first axis.

    Args:
        values:          Array of shape (M + 1, ...). Complex entries use the modulus.
        r:               Variation exponent, at least 1, or `math.inf`.
        include_initial: Add the term |a_{n_0}|^r.

    Returns:
        Array with the trailing shape of `values`.
    """
    check_variation_exponent(r)
    values = np.asarray(values)
    if values.shape[0] == 0:
        raise ExponentError("sequence length", 0, "a nonempty sequence")

    if math.isinf(r):
        if include_initial:
            return np.abs(values).max(axis=0)
        widest = np.zeros(values.shape[1:])
        for i in range(1, values.shape[0]):
            widest = np.maximum(widest, np.abs(values[i] - values[:i]).max(axis=0))
        return widest

    best = np.empty(values.shape, dtype=np.float64)
    for i in range(values.shape[0]):
        if include_initial:
            current = np.abs(values[i])**r
        else:
            current = np.zeros(values.shape[1:])
        if i > 0:
            jumps = best[:i] + np.abs(values[i] - values[:i])**r
            current = np.maximum(current, jumps.max(axis=0))
        best[i] = current
    return best.max(axis=0)**(1.0 / r)


def variation_norm(sequence: Union[Sequence[complex], np.ndarray],
                   r: float,
                   include_initial: bool = False) -> float:
    """r-variation norm of a finite real or complex sequence."""
    values = np.asarray(sequence)
    if values.ndim != 1:
        raise ExponentError("sequence dimension", values.ndim, "a one dimensional sequence")
    if not np.all(np.isfinite(values)):
        raise ExponentError("sequence entry", math.nan, "finite entries")
    return float(variation_along_axis(values, r, include_initial))

