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
"""Tiles, bitiles and collections of bitiles.

Frequencies are measured in the integer units of the discrete spectrum. A tile of width L (a
power of two) has the frequency interval ω = [mL, (m + 1)L) and the spatial interval
I = [i/L, (i + 1)/L), so |I||ω| = 1. A bitile stacks a lower tile P1 and an upper tile P2 over the
same spatial interval; in the classical setting the two are adjacent and the bitile is a dyadic
rectangle of area 2.
"""

import logging
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..errors import ConstantsError, FrequencyRangeError
from ..fourier import check_grid_size
from ..weights import DyadicGrid, DyadicInterval
from .constants import AdmissibleConstants

logger = logging.getLogger(__name__)

Interval = Tuple[float, float]


def dilate(interval: Interval, factor: float) -> Interval:
    """Dilate a half-open interval about its center."""
    center = (interval[0] + interval[1]) / 2
    half = factor * (interval[1] - interval[0]) / 2
    return center - half, center + half


def hull(first: Interval, second: Interval) -> Interval:
    return min(first[0], second[0]), max(first[1], second[1])


def in_interval(value, interval: Interval):
    return (interval[0] <= value) & (value < interval[1])


def intervals_intersect(first: Interval, second: Interval) -> bool:
    return first[0] < second[1] and second[0] < first[1]


class Tile(NamedTuple):
    """Dyadic rectangle of area 1.

    Attributes:
        scale:     Frequency width L, a power of two.
        position:  Index of the spatial interval [i/L, (i + 1)/L).
        frequency: Index of the frequency interval [mL, (m + 1)L).
    """
    scale: int
    position: int
    frequency: int

    @property
    def level(self) -> int:
        return self.scale.bit_length() - 1

    @property
    def spatial(self) -> DyadicInterval:
        return DyadicInterval(self.level, self.position)

    @property
    def omega(self) -> Interval:
        return float(self.frequency * self.scale), float((self.frequency + 1) * self.scale)


class Bitile:
    """Pair of tiles P1 (low frequency) and P2 (high frequency) over one spatial interval.

    Attributes:
        scale:     Frequency width of each tile.
        position:  Spatial index.
        frequency: Frequency index of the lower tile.
        constants: Admissible constants fixing the upper tile and the hulls.
    """
    scale: int
    position: int
    frequency: int
    constants: AdmissibleConstants

    def __init__(self, scale: int, position: int, frequency: int, constants: AdmissibleConstants):
        if scale < 1 or scale & (scale - 1) != 0:
            raise ConstantsError(f"tile width {scale} is not a power of two")
        if not 0 <= position < scale:
            raise ConstantsError(f"position {position} outside 0..{scale - 1}")
        self.scale = scale
        self.position = position
        self.frequency = frequency
        self.constants = constants

    @property
    def key(self) -> Tuple[int, int, int]:
        return self.scale, self.position, self.frequency

    @property
    def lower(self) -> Tile:
        return Tile(self.scale, self.position, self.frequency)

    @property
    def upper(self) -> Tile:
        return Tile(self.scale, self.position, self.frequency + self.constants.tile_gap)

    @property
    def spatial(self) -> DyadicInterval:
        return self.lower.spatial

    @property
    def omega(self) -> Interval:
        """ω_P, the hull of C21 ω_P1 and C22 ω_P2."""
        return hull(dilate(self.lower.omega, self.constants.c21),
                    dilate(self.upper.omega, self.constants.c22))

    @property
    def omega_tilde(self) -> Interval:
        """ω̃_P, the hull of C2 ω_P1 and C2 ω_P2."""
        return hull(dilate(self.lower.omega, self.constants.c2),
                    dilate(self.upper.omega, self.constants.c2))

    def __eq__(self, other) -> bool:
        return isinstance(other, Bitile) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Bitile(scale={self.scale}, position={self.position}, frequency={self.frequency})"


class SeparationFlags(NamedTuple):
    uniform_gap: bool
    disjoint_within_scale: bool
    scales_separated: bool


class TileCollection:
    """Finite set of bitiles sharing one set of admissible constants.

    Bitiles are kept in the canonical order (scale, position, frequency). Geometric quantities of
    all members are available as arrays, indexed like `bitiles`.

    Attributes:
        n:         Grid length.
        constants: Shared admissible constants.
        bitiles:   Members in canonical order.
        flags:     Which of the separation conditions hold: a uniform gap between the lower and
                   upper tiles, disjoint ω_P within a scale, and frequency widths of distinct
                   scales at least K0 apart.
    """
    n: int
    constants: AdmissibleConstants
    bitiles: List[Bitile]
    flags: SeparationFlags

    def __init__(self, n: int, constants: AdmissibleConstants, bitiles: Iterable[Bitile]):
        self.n = check_grid_size(n)
        self.constants = constants
        self.bitiles = sorted(set(bitiles), key=lambda p: p.key)
        for bitile in self.bitiles:
            if bitile.constants != constants:
                raise ConstantsError("bitiles in a collection must share their constants")
            low, high = bitile.omega
            if low < -n // 2 or high > n // 2:
                raise FrequencyRangeError(low if low < -n // 2 else high, n // 2)
            if bitile.scale > n:
                raise ConstantsError(f"tile width {bitile.scale} below grid resolution")
        self._build_arrays()
        self.flags = self._separation_flags()

    def _build_arrays(self) -> None:
        count = len(self.bitiles)
        self.scales = np.array([p.scale for p in self.bitiles], dtype=np.int64).reshape(count)
        self.levels = np.array([p.scale.bit_length() - 1 for p in self.bitiles],
                               dtype=np.int64).reshape(count)
        self.positions = np.array([p.position for p in self.bitiles],
                                  dtype=np.int64).reshape(count)
        self.frequencies = np.array([p.frequency for p in self.bitiles],
                                    dtype=np.int64).reshape(count)

        def bounds(intervals: Sequence[Interval]) -> Tuple[np.ndarray, np.ndarray]:
            array = np.array(intervals, dtype=np.float64).reshape(count, 2)
            return array[:, 0], array[:, 1]

        c = self.constants
        self.spatial_start = self.positions / self.scales
        self.spatial_length = 1.0 / self.scales
        self.omega = bounds([p.omega for p in self.bitiles])
        self.omega_tilde = bounds([p.omega_tilde for p in self.bitiles])
        self.omega_lower = bounds([p.lower.omega for p in self.bitiles])
        self.omega_upper = bounds([p.upper.omega for p in self.bitiles])
        self.c2_upper = bounds([dilate(p.upper.omega, c.c2) for p in self.bitiles])
        self.c3_lower = bounds([dilate(p.lower.omega, c.c3) for p in self.bitiles])

    def _separation_flags(self) -> SeparationFlags:
        if not self.bitiles:
            return SeparationFlags(True, True, True)
        low1, high1 = self.omega_lower
        low2, _ = self.omega_upper
        ratios = (low2 - high1) / (high1 - low1)
        uniform_gap = bool(np.all(ratios == ratios[0]))

        disjoint_within_scale = True
        scales_separated = True
        width = self.omega[1] - self.omega[0]
        width_lower = high1 - low1
        for scale in np.unique(self.scales):
            same = np.flatnonzero(self.scales == scale)
            omegas = sorted({(self.omega[0][i], self.omega[1][i]) for i in same})
            for first, second in zip(omegas, omegas[1:]):
                if intervals_intersect(first, second):
                    disjoint_within_scale = False
            coarser_frequency = self.scales > scale
            if np.any(coarser_frequency):
                # |I_P| > |I_P'| means P has the smaller frequency width.
                scales_separated = scales_separated and bool(
                    width[same].max() < width_lower[coarser_frequency].min() / self.constants.k0)
        return SeparationFlags(uniform_gap, disjoint_within_scale, scales_separated)

    def __len__(self) -> int:
        return len(self.bitiles)

    def __iter__(self) -> Iterator[Bitile]:
        return iter(self.bitiles)

    def __getitem__(self, index: int) -> Bitile:
        return self.bitiles[index]

    def index_of(self, bitile: Bitile) -> int:
        return self.bitiles.index(bitile)

    def subset(self, indices: Iterable[int]) -> "TileCollection":
        return TileCollection(self.n, self.constants, [self.bitiles[int(i)] for i in indices])

    def without(self, indices: Iterable[int]) -> "TileCollection":
        removed = {int(i) for i in indices}
        return TileCollection(self.n, self.constants,
                              [p for i, p in enumerate(self.bitiles) if i not in removed])

    def union(self, other: "TileCollection") -> "TileCollection":
        if other.constants != self.constants or other.n != self.n:
            raise ConstantsError("cannot join collections with different constants or grids")
        return TileCollection(self.n, self.constants, self.bitiles + other.bitiles)

    def random_subset(self, count: int, rng: np.random.Generator) -> "TileCollection":
        if count >= len(self):
            return self
        return self.subset(np.sort(rng.choice(len(self), size=count, replace=False)))

    def spatial_contained(self, interval: DyadicInterval) -> np.ndarray:
        """Mask of the members with I_P ⊂ `interval`."""
        deeper = self.levels >= interval.level
        shift = np.where(deeper, self.levels - interval.level, 0)
        return deeper & ((self.positions >> shift) == interval.index)

    def spatial_intervals(self) -> List[DyadicInterval]:
        return [p.spatial for p in self.bitiles]

    def __repr__(self) -> str:
        return f"TileCollection(n={self.n}, bitiles={len(self)})"


def admissible_scales(n: int, constants: AdmissibleConstants, scale_gap: int,
                      base_scale: int) -> List[int]:
    """Tile widths base_scale · 2^{t·scale_gap} whose bitiles fit into the band [-N/2, N/2)."""
    scales = []
    scale = base_scale
    while scale * constants.bitile_width_factor <= n and scale <= n:
        scales.append(scale)
        scale <<= scale_gap
    return scales


def build_bitile_collection(grid: DyadicGrid,
                            constants: Optional[AdmissibleConstants] = None,
                            scale_gap: Optional[int] = None,
                            base_scale: int = 2,
                            scales: Optional[int] = None) -> TileCollection:
    """All bitiles of the admitted scales inside [0, 1) × [-N/2, N/2).

    Admitted tile widths are base_scale, base_scale · 2^{scale_gap}, ...; the lower tiles of one
    scale sit at every `bitile_stride`-th frequency index so that distinct ω_P of one scale are
    disjoint.

    Args:
        grid:       Dyadic grid fixing N.
        constants:  Admissible constants, classical by default.
        scale_gap:  Generations between admitted scales; the smallest gap that keeps distinct scales
                        separated by K0 when omitted.
        base_scale: Finest admitted tile width.
        scales:     Maximum number of scales.

    Raises:
        ConstantsError: The scale gap leaves scales closer than K0, or the base scale carries no
                        packet.
    """
    constants = constants or AdmissibleConstants()
    if scale_gap is None:
        scale_gap = constants.minimal_scale_gap()
    if scale_gap < 1:
        raise ConstantsError(f"scale gap {scale_gap} must be positive")
    if base_scale < 1 or base_scale & (base_scale - 1) != 0:
        raise ConstantsError(f"base scale {base_scale} is not a power of two")
    if base_scale == 1 and constants.c3 <= 1:
        raise ConstantsError(f"C3 ω_p contains no frequency at tile width {base_scale}")

    admitted = admissible_scales(grid.n, constants, scale_gap, base_scale)
    if scales is not None:
        admitted = admitted[:scales]
    if len(admitted) > 1 and scale_gap < constants.minimal_scale_gap():
        raise ConstantsError(f"scale gap {scale_gap} does not separate |ω_P| from K0 = "
                             f"{constants.k0} times |ω_P'1|; at least "
                             f"{constants.minimal_scale_gap()} required")

    half = grid.n // 2
    bitiles = []
    for scale in admitted:
        for frequency in range(-half // scale, half // scale, constants.bitile_stride):
            candidate = Bitile(scale, 0, frequency, constants)
            low, high = candidate.omega
            if low < -half or high > half:
                continue
            bitiles.extend(Bitile(scale, position, frequency, constants)
                           for position in range(scale))
    collection = TileCollection(grid.n, constants, bitiles)
    logger.debug(f"Built {len(collection)} bitiles over scales {admitted}; "
                 f"flags {collection.flags}")
    return collection


def lattice_count(n: int, constants: AdmissibleConstants, scale_gap: int, base_scale: int,
                  scales: Optional[int] = None) -> int:
    """Number of bitiles `build_bitile_collection` produces in the classical setting."""
    admitted = admissible_scales(n, constants, scale_gap, base_scale)
    if scales is not None:
        admitted = admitted[:scales]
    return len(admitted) * (n // 2)
