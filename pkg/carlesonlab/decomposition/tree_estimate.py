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
"""Ratios monitoring the single-tree estimate."""

import logging
from typing import NamedTuple, Optional

import numpy as np

from ..errors import ExponentError
from ..fourier import Signal
from ..phaseplane import (
    IMPROVED,
    STANDARD,
    Linearization,
    Tree,
    density,
    intervals_intersect,
    model_operator,
    size,
    tree_square_function,
)
from ..weights import Weight, weighted_lp_norm
from .counting import dilated_mask

logger = logging.getLogger(__name__)

CORE = -1


class TreeEstimate(NamedTuple):
    """Normalized ‖1_E g C_T f‖_{L^s(w)} for one region E.

    Attributes:
        ratio:      Divided by w(I_T)^{1/s} size(T) density(T), with the annulus decay divided out.
        improved:   Same with the improved density, for trees of pairwise disjoint bitiles.
        degenerate: size(T) density(T) vanished; both ratios are then zero.
    """
    ratio: float
    improved: Optional[float] = None
    degenerate: bool = False


def region_mask(tree: Tree, shell: int) -> np.ndarray:
    """I_T for shell = -1, the annulus 2^{k+1} I_T \\ 2^k I_T for shell = k >= 0."""
    n = tree.collection.n
    interval = tree.top.interval
    if shell == CORE:
        return dilated_mask(interval, 1.0, n)
    return dilated_mask(interval, 2.0**(shell + 1), n) & ~dilated_mask(interval, 2.0**shell, n)


def bitiles_disjoint(tree: Tree) -> bool:
    """Whether the rectangles I_P × ω_P of the members are pairwise disjoint."""
    members = [tree.collection[int(m)] for m in tree.members]
    for position, first in enumerate(members):
        for second in members[position + 1:]:
            if (first.spatial.intersects(second.spatial)
                    and intervals_intersect(first.omega, second.omega)):
                return False
    return True


def tree_estimate_ratio(tree: Tree,
                        f: Signal,
                        g: Signal,
                        w: Weight,
                        lin: Linearization,
                        s: float,
                        shell: int = CORE,
                        decay: float = 1.0,
                        variant: str = STANDARD) -> TreeEstimate:
    """‖1_E g C_T f‖_{L^s(w)} / (w(I_T)^{1/s} size(T) density(T)).

    E is I_T itself for the core estimate and a dyadic annulus around it otherwise; the annulus
    ratio is multiplied by 2^{decay·k}. Annuli vanish once 2^k |I_T| >= 1.

    Raises:
        ExponentError: s outside [1, r'] or shell < -1.
    """
    if not 1 <= s <= lin.r_dual:
        raise ExponentError("s", s, f"1 <= s <= r' = {lin.r_dual}")
    if shell < CORE:
        raise ExponentError("shell", shell, "shell >= -1")
    members = tree.as_collection()
    tree_size = size(members, f, w)
    tree_density = density(members, g, w, lin)
    if tree_size * tree_density == 0:
        return TreeEstimate(0.0, 0.0 if bitiles_disjoint(tree) else None, degenerate=True)

    mask = region_mask(tree, shell)
    operator = model_operator(members, f, lin, variant)
    numerator = weighted_lp_norm(np.where(mask, g.samples * operator.samples, 0), s, w)
    if shell != CORE:
        numerator *= 2.0**(decay * shell)
    scale = w.mass(tree.top.interval)**(1 / s)
    ratio = numerator / (scale * tree_size * tree_density)

    improved = None
    if bitiles_disjoint(tree):
        improved_density = density(members, g, w, lin, IMPROVED)
        improved = numerator / (scale * tree_size * improved_density) if improved_density else 0.0
    logger.debug(f"Tree estimate at {tree.top}, shell {shell}: ratio {ratio:.4f}, "
                 f"improved {improved}")
    return TreeEstimate(float(ratio), improved, False)


def weak_l1_average(values: np.ndarray, weights: np.ndarray) -> float:
    """sup_λ λ Σ_{values > λ} weights, approached from below at every sample value."""
    order = np.argsort(-values, kind="stable")
    return float(np.max(values[order] * np.cumsum(weights[order]), initial=0.0))


def tree_bmo_ratio(tree: Tree, f: Signal, w: Weight, p: float = 2.0) -> float:
    """L^p(w) average of S_T f over I_T against its weak-L¹(w) average, both per w(I_T).

    Zero when S_T f vanishes on I_T.
    """
    if p < 1:
        raise ExponentError("p", p, "p >= 1")
    members = tree.as_collection()
    start, stop = tree.top.interval.grid_range(w.size)
    values = tree_square_function(members, f).samples[start:stop]
    weights = w.samples[start:stop] / w.size
    mass = float(weights.sum())
    weak = weak_l1_average(values, weights) / mass
    if weak == 0:
        return 0.0
    strong = (float(np.sum(values**p * weights)) / mass)**(1 / p)
    return strong / weak
