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
"""Empirical checks of the covering, exceptional-set and separated-tree estimates."""

import logging
from typing import Dict, List, NamedTuple

import numpy as np

from ..fourier import grid_points
from ..phaseplane import TileCollection, Top
from ..weights import DyadicInterval, Weight, maximal
from .result import DecompositionResult

logger = logging.getLogger(__name__)


def random_cover(collection: TileCollection, members: np.ndarray,
                 rng: np.random.Generator) -> List[Top]:
    """Tops of a random tree collection covering the given bitiles.

    Every bitile goes under a top whose interval is a random dyadic ancestor of I_P and whose
    frequency is the center of ω_P; bitiles sharing a top share a tree.
    """
    tops = set()
    for index in members:
        bitile = collection[int(index)]
        level = int(rng.integers(0, bitile.spatial.level + 1))
        interval = DyadicInterval(level, bitile.spatial.index >> (bitile.spatial.level - level))
        low, high = bitile.omega
        # ω_T is no wider than ω_P here since |I_T| >= |I_P|.
        tops.add(Top(interval, (low + high) / 2))
    return sorted(tops, key=Top.sort_key)


def singleton_cover(collection: TileCollection, members: np.ndarray) -> List[Top]:
    tops = {Top(collection[int(i)].spatial, sum(collection[int(i)].omega) / 2) for i in members}
    return sorted(tops, key=Top.sort_key)


def covering_efficiency(result: DecompositionResult, w: Weight, rng: np.random.Generator,
                        covers: int = 8) -> float:
    """Largest Σ_{T} w(I_T) / Σ_{T'} w(I_T') over random covers T' of the selected bitiles."""
    members = np.flatnonzero(result.selected_mask())
    if members.shape[0] == 0:
        return 0.0
    selected = result.top_mass(w)
    candidates = [singleton_cover(result.collection, members)]
    candidates += [random_cover(result.collection, members, rng) for _ in range(covers)]
    worst = 0.0
    for tops in candidates:
        cost = sum(w.mass(top.interval) for top in tops)
        worst = max(worst, selected / cost)
    logger.debug(f"Covering efficiency over {len(candidates)} covers: {worst:.4f}")
    return worst


class MajorSubset(NamedTuple):
    """Exceptional set Ω = {M_{1,w} 1_F > C w(F)} and G̃ = G \\ Ω.

    Attributes:
        exceptional: Grid mask of Ω.
        major:       Grid mask of G̃.
        holds:       w(G̃) > w(G)/2.
    """
    exceptional: np.ndarray
    major: np.ndarray
    holds: bool


def major_subset(f_support: np.ndarray, g_support: np.ndarray, w: Weight,
                 constant: float = 8.0) -> MajorSubset:
    f_support = np.asarray(f_support, dtype=bool)
    g_support = np.asarray(g_support, dtype=bool)
    level = constant * w.mass_of(f_support)
    exceptional = maximal(f_support.astype(float), 1.0, "weighted", w).samples > level
    major = g_support & ~exceptional
    holds = w.mass_of(major) > w.mass_of(g_support) / 2
    if not holds:
        logger.warning(f"Major subset keeps only {w.mass_of(major):.3e} of w(G) = "
                       f"{w.mass_of(g_support):.3e}")
    return MajorSubset(exceptional, major, bool(holds))


def distance_shells(collection: TileCollection, exceptional: np.ndarray) -> Dict[int, np.ndarray]:
    """Split P into P^{[k]} by 1 + dist(I_P, Ω^c)/|I_P| ∈ [2^k, 2^{k+1}).

    Distances are taken on the torus to the grid points outside Ω. When Ω covers the whole grid
    every bitile lands in the last shell the grid allows.
    """
    n = collection.n
    outside = grid_points(n)[~np.asarray(exceptional, dtype=bool)]
    shells: Dict[int, List[int]] = {}
    for index, bitile in enumerate(collection):
        start, stop = bitile.spatial.start, bitile.spatial.stop
        if outside.shape[0] == 0:
            k = int(np.log2(n))
        else:
            inside = (outside >= start) & (outside < stop)
            if np.any(inside):
                distance = 0.0
            else:
                to_start = np.mod(start - outside, 1.0)
                to_stop = np.mod(outside - stop, 1.0)
                distance = float(np.minimum(to_start, to_stop).min())
            k = int(np.floor(np.log2(1 + distance / bitile.spatial.length)))
        shells.setdefault(k, []).append(index)
    return {k: np.array(indices, dtype=np.int64) for k, indices in sorted(shells.items())}
