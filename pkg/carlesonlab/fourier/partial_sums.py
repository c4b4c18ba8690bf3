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
"""Fourier partial sums and the variational Carleson operators built from them."""

import logging

import numpy as np

from ..errors import ExponentError, FrequencyRangeError
from .signal import Signal, dft, grid_points
from .variation import check_variation_exponent, variation_along_axis

logger = logging.getLogger(__name__)


def partial_sum(f: Signal, n: int) -> Signal:
    """S_n f: the Fourier series of `f` truncated to the frequencies |k| < n.

    S_n f = 0 for n <= 0.

    Raises:
        FrequencyRangeError: |n| > N/2.
    """
    if abs(n) > f.size // 2:
        raise FrequencyRangeError(n, f.size // 2)
    if n <= 0:
        return Signal(np.zeros(f.size, dtype=np.complex128))
    spectrum = dft(f)
    return Signal(
        np.fft.ifft(np.where(np.abs(spectrum.frequencies) < n, spectrum.coefficients, 0)) *
        f.size)


def _components(f: Signal, ks: np.ndarray) -> np.ndarray:
    """Rows F(k) e^{2πi k x} for every frequency in `ks`."""
    coefficients = dft(f).coefficients[ks % f.size]
    return coefficients[:, np.newaxis] * np.exp(2j * np.pi * np.outer(ks, grid_points(f.size)))


def partial_sum_table(f: Signal) -> np.ndarray:
    """All partial sums at once.

    Returns:
        Complex array of shape (N/2 + 1, N); row n holds S_n f.
    """
    half = f.size // 2
    table = np.zeros((half + 1, f.size), dtype=np.complex128)
    table[1] = dft(f).coefficients[0]
    if half > 1:
        table[2:] = _components(f, np.arange(1, half)) + _components(f, -np.arange(1, half))
    return np.cumsum(table, axis=0)


def truncation_table(f: Signal, refine: int = 1) -> np.ndarray:
    """Frequency truncations below every threshold.

    The thresholds are the half-integers t = h - 1/2 for h = -N/2, ..., N/2. Row h + N/2 holds
    Σ_{k < t} F(k) e^{2πi k x}, so the first row is 0 and the last row is f. With `refine` > 1
    every gap between consecutive half-integers receives `refine` - 1 more thresholds; as spectra
    live on the integers these only repeat rows.
    """
    if refine < 1:
        raise ExponentError("refine", refine, "a positive integer")
    half = f.size // 2
    table = np.zeros((f.size + 1, f.size), dtype=np.complex128)
    table[1:] = _components(f, np.arange(-half, half))
    table = np.cumsum(table, axis=0)
    if refine > 1:
        table = np.concatenate([np.repeat(table[:-1], refine, axis=0), table[-1:]])
    return table


def threshold_values(n: int, refine: int = 1) -> np.ndarray:
    """Thresholds matching the rows of `truncation_table`."""
    return np.arange(n * refine + 1) / refine - n // 2 - 0.5


def carleson_maximal(f: Signal) -> Signal:
    """Sf(x) = sup_n |S_n f(x)|, the running maximum over all partial sums."""
    return Signal(np.abs(partial_sum_table(f)).max(axis=0))


def variational_partial_sums(f: Signal, r: float) -> Signal:
    """S_[r] f: pointwise r-oscillation of the sequence S_0 f, ..., S_{N/2} f."""
    check_variation_exponent(r)
    logger.debug(f"Variational partial sums with r={r} at N={f.size}")
    return Signal(variation_along_axis(partial_sum_table(f), r))


def variational_truncation(f: Signal, r: float, refine: int = 1) -> Signal:
    """C_[r] f: pointwise r-oscillation of the frequency truncations at half-integer thresholds.

    A block between consecutive thresholds N_{j-1} < N_j is the sum over N_{j-1} < k < N_j. With
    the symmetric thresholds ±n every partial sum difference splits into two such blocks, so the
    operator dominates `variational_partial_sums` up to a factor 2.
    """
    check_variation_exponent(r)
    logger.debug(f"Variational truncation with r={r} at N={f.size}")
    return Signal(variation_along_axis(truncation_table(f, refine), r))
