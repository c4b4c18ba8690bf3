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
"""Smooth Littlewood-Paley families over dyadic frequency bands."""

import logging
import math
from typing import List, Sequence

import numpy as np

from ..errors import ExponentError, SizingError
from ..fourier import Signal, check_grid_size, dft, frequencies
from ..phaseplane import smooth_step

logger = logging.getLogger(__name__)

MAX_BAND_CONSTANT = 4.0


def check_band_constant(constant: float) -> float:
    if math.isnan(constant) or not math.sqrt(2) < constant <= MAX_BAND_CONSTANT:
        raise ExponentError("C", constant, f"sqrt(2) < C <= {MAX_BAND_CONSTANT}")
    return constant


def transition_width(constant: float) -> float:
    """Half-width, in log2 frequency, of the crossover between neighbouring bands."""
    return min(0.25, (math.log2(constant) - 0.5) / 2)


def band_symbols(n: int, constant: float) -> np.ndarray:
    """ψ_m(k) for m = 0 .. log2(N/2), one row per band, in FFT storage order.

    The rows sum to one at every nonzero frequency and vanish at k = 0; row m is supported in
    2^m / C < |k| < C 2^m.
    """
    check_grid_size(n)
    width = transition_width(check_band_constant(constant))
    top = int(math.log2(n // 2))
    magnitudes = np.abs(frequencies(n)).astype(np.float64)
    nonzero = magnitudes > 0
    logs = np.where(nonzero, np.log2(np.where(nonzero, magnitudes, 1.0)), -np.inf)
    symbols = np.zeros((top + 1, n))
    for m in range(top + 1):
        lower = np.ones(n) if m == 0 else smooth_step(logs - (m - 0.5), width)
        upper = np.zeros(n) if m == top else smooth_step(logs - (m + 0.5), width)
        symbols[m] = np.where(nonzero, lower - upper, 0.0)
    return symbols


class LPFamily:
    """Band-limited pieces f_m of a signal, m indexing the band around frequency 2^m.

    Attributes:
        scales:   Band indices m.
        pieces:   Array (len(scales), N) of samples.
        constant: Band constant C.
        leakage:  Largest spectral amplitude of any piece outside its band.
    """
    scales: List[int]
    pieces: np.ndarray
    constant: float
    leakage: float

    def __init__(self, pieces: Sequence[Signal], scales: Sequence[int], constant: float):
        if len(pieces) != len(scales):
            raise SizingError(len(scales), len(pieces))
        self.constant = check_band_constant(constant)
        self.scales = list(scales)
        n = pieces[0].size if pieces else 8
        for piece in pieces:
            if piece.size != n:
                raise SizingError(piece.size, n)
        self.pieces = (np.array([piece.samples for piece in pieces]) if pieces else np.zeros(
            (0, n), dtype=np.complex128))
        self.leakage = self._leakage()

    def _leakage(self) -> float:
        worst = 0.0
        for m, piece in zip(self.scales, self.pieces):
            spectrum = dft(Signal(piece)).coefficients
            magnitudes = np.abs(frequencies(piece.shape[0]))
            band = (2.0**m / self.constant, self.constant * 2.0**m)
            outside = (magnitudes <= band[0]) | (magnitudes >= band[1])
            worst = max(worst, float(np.abs(spectrum[outside]).max(initial=0.0)))
        return worst

    @property
    def size(self) -> int:
        return self.pieces.shape[1]

    def __len__(self) -> int:
        return len(self.scales)

    def __getitem__(self, index: int) -> Signal:
        return Signal(self.pieces[index])

    def total(self) -> Signal:
        return Signal(self.pieces.sum(axis=0))

    def scaled(self, factor: complex) -> "LPFamily":
        return LPFamily([Signal(piece * factor) for piece in self.pieces], self.scales,
                        self.constant)

    def __repr__(self) -> str:
        return f"LPFamily(N={self.size}, scales={self.scales}, C={self.constant})"


def lp_family(f: Signal, constant: float = 2.0) -> LPFamily:
    """Split f minus its mean into smooth dyadic frequency bands.

    Raises:
        ExponentError: C outside (sqrt(2), 4].
    """
    symbols = band_symbols(f.size, constant)
    spectrum = dft(f).coefficients
    pieces = [Signal(np.fft.ifft(spectrum * symbol) * f.size) for symbol in symbols]
    family = LPFamily(pieces, list(range(symbols.shape[0])), constant)
    logger.debug(f"Littlewood-Paley family with {len(family)} bands, leakage {family.leakage:.1e}")
    return family
