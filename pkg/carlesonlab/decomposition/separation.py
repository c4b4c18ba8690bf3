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
"""Well-separated collections of 2-overlapping trees."""

import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..errors import ExponentError, TreeTypeError
from ..fourier import Signal
from ..phaseplane import OVERLAPPING, Tree, packet_coefficients

logger = logging.getLogger(__name__)


class SeparationReport(NamedTuple):
    """Outcome of `check_well_separated`.

    Attributes:
        ok:        Both conditions hold.
        condition: "i" or "ii" for the first violated condition, None when ok.
        trees:     Indices of the two trees involved in the first violation.
        bitiles:   Collection indices of the two offending bitiles.
    """
    ok: bool
    condition: Optional[str] = None
    trees: Optional[Tuple[int, int]] = None
    bitiles: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def _overlap(low_a, high_a, low_b, high_b) -> np.ndarray:
    return (low_a[:, np.newaxis] < high_b[np.newaxis, :]) & (low_b[np.newaxis, :] <
                                                             high_a[:, np.newaxis])


def check_well_separated(trees: Sequence[Tree]) -> SeparationReport:
    """Check both separation conditions over all pairs of member bitiles.

    (i)  For P ∈ T, P' ∈ T' with T != T' and |I_P| > |I_P'|: C3 ω_P1 ∩ C3 ω_P'1 = ∅ or
         I_P' ∩ I_T = ∅.
    (ii) For distinct members P, P' of the union with |I_P| = |I_P'|: the rectangles
         I_P × C3 ω_P1 and I_P' × C3 ω_P'1 are disjoint. A bitile shared by two trees counts as
         two members.

    Raises:
        TreeTypeError: A tree is not 2-overlapping.
    """
    for position, tree in enumerate(trees):
        if tree.kind != OVERLAPPING:
            raise TreeTypeError(f"tree {position} with top {tree.top} is not 2-overlapping")
    if not trees:
        return SeparationReport(True)
    collection = trees[0].collection

    owner = np.concatenate([np.full(len(tree), position) for position, tree in enumerate(trees)])
    members = np.concatenate([tree.members for tree in trees]).astype(np.int64)
    if members.shape[0] == 0:
        return SeparationReport(True)
    starts = collection.spatial_start[members]
    lengths = collection.spatial_length[members]
    low, high = collection.c3_lower[0][members], collection.c3_lower[1][members]
    top_start = np.array([trees[t].top.interval.start for t in owner])
    top_stop = np.array([trees[t].top.interval.stop for t in owner])

    frequency = _overlap(low, high, low, high)
    different_tree = owner[:, np.newaxis] != owner[np.newaxis, :]
    longer = lengths[:, np.newaxis] > lengths[np.newaxis, :]
    # Row a: P in T; column b: P' in T'. I_P' meets I_T of the row's tree.
    meets_top = _overlap(top_start, top_stop, starts, starts + lengths)
    first = different_tree & longer & frequency & meets_top

    distinct = ~np.eye(members.shape[0], dtype=bool)
    same_length = lengths[:, np.newaxis] == lengths[np.newaxis, :]
    spatial = _overlap(starts, starts + lengths, starts, starts + lengths)
    second = distinct & same_length & spatial & frequency

    for name, violations in (("i", first), ("ii", second)):
        found = np.argwhere(violations)
        if found.shape[0]:
            a, b = (int(v) for v in found[0])
            report = SeparationReport(False, name, (int(owner[a]), int(owner[b])),
                                      (int(members[a]), int(members[b])))
            logger.debug(f"Separation condition ({name}) fails: {report}")
            return report
    return SeparationReport(True)


def separated_trees_ratio(trees: Sequence[Tree], f: Signal, s: float = 0.5) -> float:
    """(Σ_P |⟨f, φ_P1⟩|²)^{1/2} divided by

        ‖f‖₂ + [sup_P |⟨f, φ_P1⟩| |I_P|^{-1/2} (Σ_T |I_T|)^{1/2}]^s ‖f‖₂^{1-s},

    the union P running over the members of the trees. Zero when the denominator vanishes.
    """
    if not 0 < s <= 1:
        raise ExponentError("s", s, "0 < s <= 1")
    members: List[int] = sorted({int(m) for tree in trees for m in tree.members})
    norm = f.norm()
    if not members or norm == 0:
        return 0.0
    union = trees[0].collection.subset(members)
    coefficients = np.abs(packet_coefficients(union, f))
    left = float(np.sqrt(np.sum(coefficients**2)))
    top_length = sum(tree.top.interval.length for tree in trees)
    peak = float(np.max(coefficients * np.sqrt(union.scales))) * np.sqrt(top_length)
    return left / (norm + peak**s * norm**(1 - s))
