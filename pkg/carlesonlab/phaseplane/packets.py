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
"""Wave packets adapted to tiles, and the sampled packet families of a frequency interval."""

from typing import Tuple

import numpy as np

from ..errors import FrequencyRangeError
from ..fourier import Signal, dft, frequencies
from .constants import AdmissibleConstants
from .tiles import Tile, TileCollection, dilate

SPECTRAL_CUTOFF = 1e-14


def bump(u) -> np.ndarray:
    """Smooth profile exp(1 - 1/(1 - 4u²)) on |u| < 1/2, zero elsewhere; its maximum is 1.

    Values below 1e-14 are cut to zero, which makes the support exactly the open interval where
    the profile exceeds the cutoff.
    """
    u = np.asarray(u, dtype=np.float64)
    inside = np.abs(u) < 0.5
    values = np.zeros_like(u)
    values[inside] = np.exp(1 - 1 / (1 - 4 * u[inside]**2))
    values[values < SPECTRAL_CUTOFF] = 0.0
    return values


def smooth_step(s, width: float) -> np.ndarray:
    """Smooth monotone step: 0 for s <= -width, 1 for s >= width.

    Built from the same exp(-1/t) profile as `bump`.
    """
    s = np.asarray(s, dtype=np.float64)

    def h(t):
        t = np.asarray(t, dtype=np.float64)
        out = np.zeros_like(t)
        positive = t > 0
        out[positive] = np.exp(-1 / t[positive])
        return out

    rising = h(width + s)
    return rising / (rising + h(width - s))


def _tile_profile(tile: Tile, constants: AdmissibleConstants, n: int) -> np.ndarray:
    """Normalized bump over C3 ω_p, in FFT storage order."""
    support = dilate(tile.omega, constants.c3)
    if support[0] < -n // 2 or support[1] > n // 2:
        raise FrequencyRangeError(support[0] if support[0] < -n // 2 else support[1], n // 2)
    ks = frequencies(n)
    center = (support[0] + support[1]) / 2
    profile = bump((ks - center) / (support[1] - support[0]))
    energy = np.sum(profile**2)
    if energy == 0:
        raise FrequencyRangeError(center, n // 2)
    return profile / np.sqrt(energy)


def packet_spectrum(tile: Tile, constants: AdmissibleConstants, n: int) -> np.ndarray:
    """φ̂_p(k) in FFT storage order: a unit-energy bump on C3 ω_p modulated to the center of I_p.

    Raises:
        FrequencyRangeError: C3 ω_p leaves the band, or contains no integer frequency.
    """
    ks = frequencies(n)
    phase = np.exp(-2j * np.pi * tile.spatial.center * ks)
    return _tile_profile(tile, constants, n) * phase


def wave_packet(tile: Tile, constants: AdmissibleConstants, n: int) -> Signal:
    """φ_p sampled on the grid; ‖φ_p‖₂ = 1 and supp φ̂_p ⊂ C3 ω_p."""
    return Signal(np.fft.ifft(packet_spectrum(tile, constants, n)) * n)


def packet_matrix(collection: TileCollection, upper: bool = False) -> np.ndarray:
    """Samples of φ_{P1} (or φ_{P2}) for every bitile, one row per bitile."""
    n = collection.n
    rows = np.zeros((len(collection), n), dtype=np.complex128)
    for row, bitile in enumerate(collection):
        tile = bitile.upper if upper else bitile.lower
        rows[row] = np.fft.ifft(packet_spectrum(tile, collection.constants, n)) * n
    return rows


def packet_coefficients(collection: TileCollection, f: Signal, upper: bool = False) -> np.ndarray:
    """a_P = ⟨f, φ_{P1}⟩ (or ⟨f, φ_{P2}⟩) for every bitile, computed on the spectrum side."""
    spectrum = dft(f).coefficients
    out = np.zeros(len(collection), dtype=np.complex128)
    for row, bitile in enumerate(collection):
        tile = bitile.upper if upper else bitile.lower
        out[row] = np.vdot(packet_spectrum(tile, collection.constants, collection.n), spectrum)
    return out


def partition_bump(interval: Tuple[float, float], n: int, dilation: float = 0.5) -> np.ndarray:
    """φ_J: the bump profile on (1 + dilation) J, in FFT storage order."""
    support = dilate(interval, 1 + dilation)
    center = (support[0] + support[1]) / 2
    return bump((frequencies(n) - center) / (support[1] - support[0]))


def sampling_packets(interval: Tuple[float, float], n: int,
                     dilation: float = 0.5) -> Tuple[np.ndarray, np.ndarray]:
    """The packet family φ_{I×J}, |I| = 1/(2|J|), over a frequency interval J.

    φ̂_{I×J}(ξ) = |I|^{1/2} sqrt(φ_J(ξ)) e^{-2πi c(I) ξ}. For every f with spectrum F,
    Σ_I ⟨f, φ_{I×J}⟩ φ̂_{I×J} = F φ_J as long as (1 + dilation) < 2.

    Returns:
        Centers c(I) and the packet spectra, one row per spatial interval I.
    """
    width = interval[1] - interval[0]
    count = int(2 * width)
    if count > n or count < 1:
        raise FrequencyRangeError(width, n // 2)
    centers = (np.arange(count) + 0.5) / count
    profile = np.sqrt(partition_bump(interval, n, dilation))
    phases = np.exp(-2j * np.pi * np.outer(centers, frequencies(n)))
    return centers, np.sqrt(1 / count) * profile[np.newaxis, :] * phases


def sampling_reconstruction(f: Signal, interval: Tuple[float, float],
                            dilation: float = 0.5) -> np.ndarray:
    """Σ_I ⟨f, φ_{I×J}⟩ φ̂_{I×J} in FFT storage order."""
    _, spectra = sampling_packets(interval, f.size, dilation)
    coefficients = spectra.conj() @ dft(f).coefficients
    return coefficients @ spectra


def packet_grid_check(tile: Tile, constants: AdmissibleConstants, n: int) -> float:
    """Largest packet amplitude outside C3 ω_p on the spectrum side; zero by construction."""
    support = dilate(tile.omega, constants.c3)
    outside = (frequencies(n) <= support[0]) | (frequencies(n) >= support[1])
    return float(np.abs(packet_spectrum(tile, constants, n)[outside]).max(initial=0.0))

