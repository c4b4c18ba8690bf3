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
"""Muckenhoupt constants, doubling exponents and the A_∞ exponent of a weight."""

import logging
from typing import Iterator, Tuple

import numpy as np

from ..errors import ExponentError
from .weight import Weight

logger = logging.getLogger(__name__)


def _check_p(p: float) -> None:
    if not p > 1:
        raise ExponentError("p", p, "p > 1")


def _ap_sums(w: Weight, p: float) -> Tuple[np.ndarray, np.ndarray]:
    dual = w.samples**(-1.0 / (p - 1))
    return (np.concatenate([[0.0], np.cumsum(w.samples)]),
            np.concatenate([[0.0], np.cumsum(dual)]))


def _ap_values(sums: Tuple[np.ndarray, np.ndarray], starts: np.ndarray, length: int,
               p: float) -> np.ndarray:
    weight_sums, dual_sums = sums
    stops = starts + length
    average = (weight_sums[stops] - weight_sums[starts]) / length
    dual_average = (dual_sums[stops] - dual_sums[starts]) / length
    return average * dual_average**(p - 1)


def _dyadic_starts(n: int) -> Iterator[Tuple[np.ndarray, int]]:
    length = n
    while length >= 1:
        yield np.arange(0, n, length), length
        if length >= 2:
            yield np.arange(length // 2, n - length + 1, length), length
        length //= 2


def ap_constant(w: Weight, p: float) -> float:
    """[w]_{A_p} as a supremum over dyadic and half-shifted dyadic intervals.

    Every interval is within a fixed factor of one of these, so the value is comparable to the
    supremum over all intervals. The result is memoized on the weight.

    Raises:
        ExponentError: p <= 1.
    """
    _check_p(p)

    def compute() -> float:
        sums = _ap_sums(w, p)
        best = max(float(_ap_values(sums, starts, length, p).max())
                   for starts, length in _dyadic_starts(w.size))
        # Single grid cells give 1 up to rounding.
        return max(best, 1.0)

    return w.memoized(("ap", p), compute)


def ap_constant_exhaustive(w: Weight, p: float) -> float:
    """[w]_{A_p} over every grid-aligned subinterval of [0, 1). Quadratic in N."""
    _check_p(p)
    sums = _ap_sums(w, p)
    best = 1.0
    for length in range(1, w.size + 1):
        best = max(best, float(_ap_values(sums, np.arange(w.size - length + 1), length, p).max()))
    return best


def doubling_exponent(w: Weight) -> float:
    """Smallest γ with w(2^k I) <= 2^{γk} w(I) for every dyadic I and every k >= 1 with
    2^k |I| <= 1.

    The dilation 2^k I shares the center of I and wraps around the torus. The smallest exponent
    is the largest value of log2(w(2^k I)/w(I))/k, so it is computed directly.
    """
    def compute() -> float:
        depth = w.size.bit_length() - 1
        gamma = 0.0
        for level in range(1, depth + 1):
            centers = (np.arange(1 << level) + 0.5) / (1 << level)
            base = w.level_masses(level)
            for k in range(1, level + 1):
                half = 2.0**(k - level - 1)
                dilated = w.measure(centers - half, centers + half)
                gamma = max(gamma, float(np.max(np.log2(dilated / base))) / k)
        logger.debug(f"Doubling exponent {gamma}")
        return gamma

    return w.memoized("doubling", compute)


def a_infinity_exponent(w: Weight) -> float:
    """Largest β with w(E)/w(I) <= (|E|/|I|)^β for every dyadic I and every union E ⊂ I of grid
    cells.

    For a fixed number of cells w(E) is largest when E collects the largest samples of I, so only
    those sets are enumerated. Lebesgue measure gives 1. The value estimates the A_∞ exponent with
    constant 1.
    """
    def compute() -> float:
        depth = w.size.bit_length() - 1
        beta = 1.0
        for level in range(depth):
            cells = w.samples.reshape(1 << level, -1)
            count = cells.shape[1]
            largest = np.cumsum(-np.sort(-cells, axis=1), axis=1)
            fractions = largest[:, :-1] / largest[:, -1:]
            lengths = np.arange(1, count) / count
            beta = min(beta, float(np.min(np.log(fractions) / np.log(lengths))))
        logger.debug(f"A_∞ exponent {beta}")
        return beta

    return w.memoized("a_infinity", compute)
