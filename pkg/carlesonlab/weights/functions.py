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
"""Weighted norms, maximal functions and the dyadic sharp function."""

import math
from typing import Optional

import numpy as np

from ..errors import ConfigError, ExponentError, SizingError
from ..fourier import Signal, samples_of
from ..fourier.signal import ArrayLike
from .weight import Weight


def _weight_samples(w: Optional[Weight], n: int) -> np.ndarray:
    if w is None:
        return np.ones(n)
    if w.size != n:
        raise SizingError(w.size, n)
    return w.samples


def weighted_lp_norm(f: ArrayLike, p: float, w: Optional[Weight] = None) -> float:
    """‖f‖_{L^p(w)} = (Σ |f(x_i)|^p w(x_i) / N)^{1/p}; the maximum of |f| for p = inf.

    Without a weight the norm is taken with respect to Lebesgue measure.
    """
    if math.isnan(p) or p < 1:
        raise ExponentError("p", p, "p >= 1 or p = inf")
    values = np.abs(samples_of(f))
    if math.isinf(p):
        return float(values.max())
    weights = _weight_samples(w, values.shape[0])
    return float(np.mean(values**p * weights)**(1.0 / p))


def _sliding_max(values: np.ndarray, window: int) -> np.ndarray:
    """Maximum over the trailing window of length `window` ending at every position."""
    table = values.copy()
    span = 1
    while 2 * span <= window:
        shifted = np.full_like(table, -np.inf)
        shifted[span:] = table[:-span]
        table = np.maximum(table, shifted)
        span *= 2
    shifted = np.full_like(table, -np.inf)
    offset = window - span
    if offset > 0:
        shifted[offset:] = table[:-offset]
    return np.maximum(table, shifted)


def maximal(f: ArrayLike,
            t: float = 1.0,
            mode: str = "lebesgue",
            w: Optional[Weight] = None) -> Signal:
    """Maximal t-average over grid-aligned intervals.

    M_t f(x) = sup_{I ∋ x} (|I|^{-1} ∫_I |f|^t)^{1/t}, and in weighted mode
    M_{t,w} f(x) = sup_{I ∋ x} (w(I)^{-1} ∫_I |f|^t w)^{1/t}. The intervals are the subintervals
    [s/N, (s + L)/N) of [0, 1); grid point i lies in such an interval if s <= i < s + L.

    Raises:
        ExponentError: t < 1.
        ConfigError:   Weighted mode without a weight, or an unknown mode.
    """
    if math.isnan(t) or t < 1:
        raise ExponentError("t", t, "t >= 1")
    if mode not in ("lebesgue", "weighted"):
        raise ConfigError(f"unknown maximal function mode {mode}")
    if mode == "weighted" and w is None:
        raise ConfigError("the weighted maximal function requires a weight")

    values = np.abs(samples_of(f))**t
    n = values.shape[0]
    weights = _weight_samples(w if mode == "weighted" else None, n)
    numerator = np.concatenate([[0.0], np.cumsum(values * weights)])
    denominator = np.concatenate([[0.0], np.cumsum(weights)])

    result = np.zeros(n)
    for length in range(1, n + 1):
        starts = np.arange(n - length + 1)
        sums = numerator[starts + length] - numerator[starts]
        averages = sums / (denominator[starts + length] - denominator[starts])
        # Interval starting at s covers points s .. s + length - 1; the best interval containing
        # point i starts in [i - length + 1, i].
        padded = np.full(n, -np.inf)
        padded[:starts.shape[0]] = averages
        best_ending = _sliding_max(padded, length)
        result = np.maximum(result, best_ending)
    return Signal(result**(1.0 / t))


def dyadic_sharp(f: ArrayLike) -> Signal:
    """f^#(x) = sup over dyadic I ∋ x of |I|^{-1} ∫_I |f - avg_I f|."""
    values = samples_of(f)
    n = values.shape[0]
    result = np.zeros(n)
    length = n
    while length >= 2:
        blocks = values.reshape(-1, length)
        oscillation = np.abs(blocks - blocks.mean(axis=1, keepdims=True)).mean(axis=1)
        result = np.maximum(result, np.repeat(oscillation, length))
        length //= 2
    return Signal(result)


def average(f: ArrayLike) -> complex:
    return complex(np.mean(samples_of(f)))
