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
"""Joint decomposition by size and density into the levels P_n."""

import logging
import math
from typing import Dict, List, NamedTuple, Optional

import numpy as np
from tqdm import tqdm

from ..errors import CertificateError, ExponentError
from ..fourier import Signal
from ..phaseplane import (
    Linearization,
    TileCollection,
    Top,
    Tree,
    bilinear_form,
    density,
    dual_exponent,
    size,
)
from ..weights import Weight
from .density import density_decompose
from .result import CERTIFICATE_TOLERANCE
from .size import size_decompose

logger = logging.getLogger(__name__)


class Level(NamedTuple):
    """One level P_n of the joint decomposition.

    Attributes:
        index:         n.
        trees:         Trees whose union is P_n.
        members:       Indices of P_n in the input collection.
        size_bound:    2^{-n/(2 q0)} E1.
        density_bound: 2^{-n/r'}.
        size:          size(P_n), re-evaluated.
        density:       density(P_n), re-evaluated.
    """
    index: int
    trees: List[Tree]
    members: np.ndarray
    size_bound: float
    density_bound: float
    size: float
    density: float

    def top_mass(self, w: Weight) -> float:
        return float(sum(w.mass(tree.top.interval) for tree in self.trees))


def _thresholds(n: int, e1: float, q0: float, r_dual: float):
    return 2.0**(-n / (2 * q0)) * e1, 2.0**(-n / r_dual)


def _starting_level(current_size: float, current_density: float, e1: float, q0: float,
                    r_dual: float) -> Optional[int]:
    candidates = []
    if current_size > 0:
        candidates.append(-2 * q0 * math.log2(current_size / e1))
    if current_density > 0:
        candidates.append(-r_dual * math.log2(current_density))
    if not candidates:
        return None
    return math.floor(min(candidates))


def _singleton_trees(collection: TileCollection, indices: np.ndarray) -> List[Tree]:
    trees = []
    for index in indices:
        bitile = collection[int(index)]
        low, high = bitile.omega
        trees.append(Tree(collection, [int(index)], Top(bitile.spatial, (low + high) / 2)))
    return trees


def two_parameter_decompose(collection: TileCollection,
                            f: Signal,
                            g: Signal,
                            w: Weight,
                            lin: Linearization,
                            q0: float,
                            r: float,
                            progress: Optional[tqdm] = None) -> Dict[int, Level]:
    """Split P into levels P_n, each a union of trees, with size(P_n) <= 2^{-n/(2 q0)} E1 and
    density(P_n) <= 2^{-n/r'}, where E1 = w(supp f)^{1/(2 q0)}.

    Starting at the smallest n whose bounds hold for P, every level runs a size decomposition at
    the next size threshold and a density decomposition at the next density threshold; the
    removed bitiles form P_n. Bitiles of vanishing size and density end up as singleton trees in
    one final level.

    Raises:
        ExponentError:    q0 <= 1 or r <= 2 q0.
        CertificateError: A level breaks its bounds on re-evaluation.
    """
    if math.isnan(q0) or q0 <= 1:
        raise ExponentError("q0", q0, "q0 > 1")
    if math.isnan(r) or r <= 2 * q0:
        raise ExponentError("r", r, f"r > 2 q0 = {2 * q0}")
    r_dual = dual_exponent(r)
    if len(collection) == 0:
        return {}
    e1 = w.mass_of(f.samples != 0)**(1 / (2 * q0))
    if progress is not None:
        progress.total = len(collection)

    remaining = np.arange(len(collection))
    current = collection
    levels: Dict[int, Level] = {}
    start = _starting_level(size(current, f, w) if e1 > 0 else 0.0, density(current, g, w, lin),
                            e1, q0, r_dual)
    n = start if start is not None else 0
    exhausted = start is None
    while remaining.shape[0]:
        if exhausted:
            levels[n] = _finish_level(collection, n, _singleton_trees(collection, remaining),
                                      remaining, f, g, w, lin, e1, q0, r_dual)
            if progress is not None:
                progress.update(remaining.shape[0])
            break

        size_next, density_next = _thresholds(n + 1, e1, q0, r_dual)
        by_size = size_decompose(current, f, w, size_next) if e1 > 0 else None
        after_size = by_size.remainder if by_size is not None else np.ones(len(current), bool)
        rest = current.subset(np.flatnonzero(after_size))
        by_density = density_decompose(rest, g, w, lin, density_next)

        trees = []
        if by_size is not None:
            trees += [_reindex(tree, collection, remaining) for tree in by_size.trees]
        rest_indices = remaining[np.flatnonzero(after_size)]
        trees += [_reindex(tree, collection, rest_indices) for tree in by_density.trees]
        taken = np.concatenate([tree.members for tree in trees]) if trees else np.zeros(0, int)
        if taken.shape[0]:
            levels[n] = _finish_level(collection, n, trees, np.sort(taken), f, g, w, lin, e1, q0,
                                      r_dual)
            if progress is not None:
                progress.update(taken.shape[0])

        remaining = rest_indices[np.flatnonzero(by_density.remainder)]
        current = collection.subset(remaining)
        n += 1
        exhausted = bool(remaining.shape[0]) and (e1 == 0 or size(current, f, w) == 0) and density(
            current, g, w, lin) == 0

    logger.info(f"Two-parameter decomposition: levels {sorted(levels)}")
    return levels


def _reindex(tree: Tree, collection: TileCollection, indices: np.ndarray) -> Tree:
    """The same tree with members referring to the full collection."""
    return Tree(collection, indices[tree.members], tree.top)


def _finish_level(collection: TileCollection, n: int, trees: List[Tree], members: np.ndarray,
                  f: Signal, g: Signal, w: Weight, lin: Linearization, e1: float, q0: float,
                  r_dual: float) -> Level:
    size_bound, density_bound = _thresholds(n, e1, q0, r_dual)
    level_collection = collection.subset(members)
    level_size = size(level_collection, f, w)
    level_density = density(level_collection, g, w, lin)
    tolerance = 1 + CERTIFICATE_TOLERANCE
    if level_size > size_bound * tolerance or level_density > density_bound * tolerance:
        raise CertificateError(f"level {n} has size {level_size!r} (bound {size_bound!r}) and "
                               f"density {level_density!r} (bound {density_bound!r})")
    level = Level(n, trees, members, size_bound, density_bound, level_size, level_density)
    logger.debug(f"Level {n}: {len(trees)} trees, {members.shape[0]} bitiles, "
                 f"Σ w(I_T) / 2^n = {level.top_mass(w) / 2.0**n:.3e}")
    return level


def level_bilinear_sum(levels: Dict[int, Level], collection: TileCollection, f: Signal,
                       g: Signal, w: Weight, lin: Linearization) -> complex:
    """Σ_n B_{P_n}(f, g)."""
    return sum((bilinear_form(collection.subset(level.members), f, g, w, lin)
                for level in levels.values()), 0j)


def aggregation_ratio(levels: Dict[int, Level], collection: TileCollection, f: Signal, g: Signal,
                      w: Weight, lin: Linearization) -> float:
    """|B_P(f, g)| / Σ_n Σ_{T ∈ T_n} w(I_T) size(T) density(T); zero for an empty denominator."""
    total = 0.0
    for level in levels.values():
        for tree in level.trees:
            members = tree.as_collection()
            total += w.mass(tree.top.interval) * size(members, f, w) * density(members, g, w, lin)
    if total == 0:
        return 0.0
    return abs(bilinear_form(collection, f, g, w, lin)) / total
