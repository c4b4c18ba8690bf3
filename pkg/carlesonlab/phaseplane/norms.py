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
"""Tree square functions, size and density of collections of bitiles."""

import logging
from typing import Optional, Tuple

import numpy as np

from ..errors import ConfigError, SizingError
from ..fourier import Signal, grid_points
from ..weights import DyadicInterval, Weight
from .linearization import Linearization
from .packets import packet_coefficients
from .tiles import Interval, TileCollection
from .trees import Top, scan_tops

logger = logging.getLogger(__name__)

STANDARD = "standard"
IMPROVED = "improved"


def chi_tilde(interval: DyadicInterval, n: int) -> np.ndarray:
    """χ̃_I(x) = [1 + (|x - c(I)|/|I|)²]^{-1/2} with the torus distance."""
    distance = np.abs(grid_points(n) - interval.center)
    distance = np.minimum(distance, 1 - distance)
    return (1 + (distance / interval.length)**2)**-0.5


def bitile_energies(collection: TileCollection, f: Signal, w: Weight) -> np.ndarray:
    """|⟨f, φ_P1⟩|² w(I_P)/|I_P|: the contribution of each bitile to ‖S_Q f‖²_{L²(w)}."""
    if w.size != collection.n:
        raise SizingError(w.size, collection.n)
    coefficients = packet_coefficients(collection, f)
    masses = np.array([w.mass(p.spatial) for p in collection])
    return np.abs(coefficients)**2 * masses * collection.scales


def tree_square_function(collection: TileCollection, f: Signal,
                         members: Optional[np.ndarray] = None) -> Signal:
    """S_Q f(x) = (Σ_{P∈Q} |⟨f, φ_P1⟩|² 1_{I_P}(x)/|I_P|)^{1/2}."""
    n = collection.n
    chosen = np.arange(len(collection)) if members is None else np.asarray(members, dtype=int)
    coefficients = packet_coefficients(collection, f)
    squares = np.zeros(n)
    for index in chosen:
        start, stop = collection[int(index)].spatial.grid_range(n)
        squares[start:stop] += np.abs(coefficients[index])**2 * collection.scales[index]
    return Signal(np.sqrt(squares))


def size_with_top(collection: TileCollection,
                  f: Signal,
                  w: Weight,
                  active: Optional[np.ndarray] = None) -> Tuple[float, Optional[Top]]:
    """Size together with a top realizing it, over the restricted tops."""
    energies = bitile_energies(collection, f, w)
    best = 0.0
    best_top = None
    for scan in scan_tops(collection, active):
        values = scan.overlapping.astype(float) @ energies[scan.candidates] / w.mass(scan.interval)
        position = int(np.argmax(values))
        if values[position] > best:
            best = float(values[position])
            best_top = Top(scan.interval, float(scan.xis[position]))
    return float(np.sqrt(best)), best_top


def size(collection: TileCollection, f: Signal, w: Weight) -> float:
    """sup over 2-overlapping trees T ⊂ P of w(I_T)^{-1/2} ‖S_T f‖_{L²(w)}; zero when empty."""
    return size_with_top(collection, f, w)[0]


class DensityIntegrand:
    """Per-interval weights χ̃_I^D |g|^{r'} w/N of every linearization event, sorted by threshold.

    Integrating over ω_T reduces to a difference of cumulative sums.
    """
    def __init__(self, g: Signal, w: Weight, lin: Linearization, decay: float):
        if g.size != w.size or lin.size != w.size:
            raise SizingError(lin.size, w.size)
        points, thresholds, masses = lin.events()
        order = np.argsort(thresholds, kind="stable")
        self.points = points[order]
        self.thresholds = thresholds[order]
        self.base = (masses[order] * np.abs(g.samples[self.points])**lin.r_dual *
                     w.samples[self.points] / w.size)
        self.decay = decay
        self.r_dual = lin.r_dual
        self.n = w.size

    def integrals(self, interval: DyadicInterval, omegas: Tuple[np.ndarray, np.ndarray]):
        """∫ χ̃_I^D |g|^{r'} Σ_{N_j ∈ ω} |d_j|^{r'} w for every ω in `omegas`."""
        if self.points.shape[0] == 0:
            return np.zeros(np.shape(omegas[0]))
        decay = chi_tilde(interval, self.n)[self.points]**self.decay
        cumulative = np.concatenate([[0.0], np.cumsum(self.base * decay)])
        low = np.searchsorted(self.thresholds, omegas[0], side="left")
        high = np.searchsorted(self.thresholds, omegas[1], side="left")
        return cumulative[high] - cumulative[low]

    def integral(self, interval: DyadicInterval, omega: Interval) -> float:
        return float(self.integrals(interval, (np.array([omega[0]]), np.array([omega[1]])))[0])


def density_with_top(collection: TileCollection,
                     g: Signal,
                     w: Weight,
                     lin: Linearization,
                     mode: str = STANDARD,
                     active: Optional[np.ndarray] = None) -> Tuple[float, Optional[Top]]:
    """Density (or improved density) with a maximizing top.

    For the improved density the returned top is (I_P, center of ω_P2) of the maximizing bitile.
    """
    decay = collection.constants.decay_exponent(w)
    integrand = DensityIntegrand(g, w, lin, decay)
    best = 0.0
    best_top = None
    if mode == IMPROVED:
        indices = np.arange(len(collection)) if active is None else np.flatnonzero(active)
        for index in indices:
            bitile = collection[int(index)]
            omega = bitile.upper.omega
            value = integrand.integral(bitile.spatial, omega) / w.mass(bitile.spatial)
            if value > best:
                best = value
                best_top = Top(bitile.spatial, (omega[0] + omega[1]) / 2)
    else:
        for scan in scan_tops(collection, active):
            half = 0.5 / scan.interval.length
            values = integrand.integrals(scan.interval,
                                         (scan.xis - half, scan.xis + half)) / w.mass(scan.interval)
            position = int(np.argmax(values))
            if values[position] > best:
                best = float(values[position])
                best_top = Top(scan.interval, float(scan.xis[position]))
    return float(best**(1 / integrand.r_dual)), best_top


def density(collection: TileCollection,
            g: Signal,
            w: Weight,
            lin: Linearization,
            mode: str = STANDARD) -> float:
    """Density of a collection: the supremum over nonempty trees of

        (w(I_T)^{-1} ∫ χ̃_{I_T}^D |g|^{r'} Σ_{j: N_j ∈ ω_T} |d_j|^{r'} w)^{1/r'}.

    The improved density takes the supremum over single bitiles with ω_P2 in place of ω_T.
    """
    if mode not in (STANDARD, IMPROVED):
        raise ConfigError(f"unknown density mode {mode}")
    return density_with_top(collection, g, w, lin, mode)[0]


def local_average_bound(collection: TileCollection, f: Signal, w: Weight, q: float,
                        decay: float) -> float:
    """sup_P (w(I_P)^{-1} ∫ |f|^q χ̃_{I_P}^decay w)^{1/q}: the right side of the size bound."""
    best = 0.0
    values = np.abs(f.samples)**q * w.samples / w.size
    for bitile in collection:
        integral = np.sum(values * chi_tilde(bitile.spatial, collection.n)**decay)
        best = max(best, float(integral / w.mass(bitile.spatial)))
    return best**(1 / q)


def size_bound_ratio(collection: TileCollection,
                     f: Signal,
                     w: Weight,
                     q: float = 2.0,
                     decay: float = 4.0) -> float:
    """size(P) divided by the local average bound; zero when the bound vanishes."""
    bound = local_average_bound(collection, f, w, q, decay)
    if bound == 0:
        return 0.0
    return size(collection, f, w) / bound
