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
"""Trees of bitiles and the enumeration of candidate tree tops.

A tree has a top: a dyadic interval I_T and a frequency ξ_T, with
ω_T = [ξ_T - 1/(2|I_T|), ξ_T + 1/(2|I_T|)). Every member satisfies I_P ⊂ I_T and ω_T ⊂ ω̃_P. Suprema
over trees are evaluated on the restricted family of tops where ξ_T is a half-integer multiple of
1/|I_T|; for a fixed top the maximal tree realizes every supremum used here.
"""

import logging
from typing import Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from ..errors import TreeTypeError
from ..weights import DyadicInterval
from .tiles import Interval, TileCollection, dilate, in_interval, intervals_intersect

logger = logging.getLogger(__name__)

OVERLAPPING = "overlapping2"
LACUNARY = "lacunary2"
MIXED = "mixed"


class Top(NamedTuple):
    """Tree top (I_T, ξ_T)."""
    interval: DyadicInterval
    xi: float

    @property
    def omega(self) -> Interval:
        half = 0.5 / self.interval.length
        return self.xi - half, self.xi + half

    def shifted(self, steps: int) -> "Top":
        """Top with ξ moved by `steps` half-widths of ω_T."""
        return Top(self.interval, self.xi + steps * 0.5 / self.interval.length)

    def sort_key(self) -> Tuple[float, float, float]:
        return self.xi, self.interval.start, self.omega[0]


def tree_member_mask(collection: TileCollection, top: Top) -> np.ndarray:
    """Members of the maximal tree with the given top."""
    omega = top.omega
    return (collection.spatial_contained(top.interval) & (collection.omega_tilde[0] <= omega[0]) &
            (omega[1] <= collection.omega_tilde[1]))


def overlapping_mask(collection: TileCollection, top: Top) -> np.ndarray:
    """Members P of the collection with ξ_T ∈ C2 ω_P2."""
    return in_interval(top.xi, collection.c2_upper)


class Tree:
    """Members of a collection sharing one top.

    Attributes:
        collection: Collection the members belong to.
        members:    Sorted member indices into the collection.
        top:        Tree top.
    """
    collection: TileCollection
    members: np.ndarray
    top: Top

    def __init__(self, collection: TileCollection, members, top: Top):
        members = np.unique(np.asarray(members, dtype=np.int64))
        allowed = tree_member_mask(collection, top)
        if members.shape[0] and not np.all(allowed[members]):
            raise TreeTypeError(f"bitiles {members[~allowed[members]].tolist()} do not fit under "
                                f"top {top}")
        self.collection = collection
        self.members = members
        self.top = top

    @classmethod
    def maximal(cls, collection: TileCollection, top: Top,
                active: Optional[np.ndarray] = None) -> "Tree":
        mask = tree_member_mask(collection, top)
        if active is not None:
            mask &= active
        return cls(collection, np.flatnonzero(mask), top)

    @property
    def kind(self) -> str:
        if self.members.shape[0] == 0:
            return OVERLAPPING
        overlap = overlapping_mask(self.collection, self.top)[self.members]
        if np.all(overlap):
            return OVERLAPPING
        if not np.any(overlap):
            return LACUNARY
        return MIXED

    def split(self) -> Tuple["Tree", "Tree"]:
        """The 2-overlapping and the 2-lacunary part of the tree."""
        overlap = overlapping_mask(self.collection, self.top)[self.members]
        return (Tree(self.collection, self.members[overlap], self.top),
                Tree(self.collection, self.members[~overlap], self.top))

    def as_collection(self) -> TileCollection:
        return self.collection.subset(self.members)

    def __len__(self) -> int:
        return self.members.shape[0]

    def __repr__(self) -> str:
        return f"Tree(top={self.top}, members={self.members.tolist()})"


class TopScan(NamedTuple):
    """Candidate tops sharing one interval.

    Attributes:
        interval:    Top interval I.
        xis:         Candidate ξ values.
        candidates:  Indices of the bitiles with I_P ⊂ I.
        tree:        Boolean (len(xis), len(candidates)): membership in the maximal tree.
        overlapping: Membership in the maximal 2-overlapping tree.
    """
    interval: DyadicInterval
    xis: np.ndarray
    candidates: np.ndarray
    tree: np.ndarray
    overlapping: np.ndarray


def scan_tops(collection: TileCollection, active: Optional[np.ndarray] = None) -> Iterator[TopScan]:
    """All restricted tops whose maximal tree is nonempty, grouped by interval.

    Intervals are visited by generation and then left to right; ξ increases within a group.
    """
    if active is None:
        active = np.ones(len(collection), dtype=bool)
    if not np.any(active):
        return
    half_band = collection.n / 2
    deepest = int(collection.levels[active].max())
    for level in range(deepest + 1):
        width = float(1 << level)
        xis = np.arange(-half_band + width / 2, half_band - width / 2 + 1e-9, width / 2)
        occupied = np.unique(collection.positions[active & (collection.levels >= level)] >>
                             (collection.levels[active & (collection.levels >= level)] - level))
        for index in occupied:
            interval = DyadicInterval(level, int(index))
            candidates = np.flatnonzero(collection.spatial_contained(interval) & active)
            low = xis[:, np.newaxis] - width / 2
            high = xis[:, np.newaxis] + width / 2
            tree = ((collection.omega_tilde[0][candidates] <= low) &
                    (high <= collection.omega_tilde[1][candidates]))
            overlapping = tree & in_interval(xis[:, np.newaxis],
                                             (collection.c2_upper[0][candidates],
                                              collection.c2_upper[1][candidates]))
            keep = np.any(tree, axis=1)
            if np.any(keep):
                yield TopScan(interval, xis[keep], candidates, tree[keep], overlapping[keep])


def tree_remarks_hold(tree: Tree) -> bool:
    """Structural consequences of the separation conditions for a tree.

    Members of equal scale have disjoint spatial intervals, and in a 2-overlapping tree a member
    with the longer spatial interval has ω_P disjoint from C3 ω_P'1 of a member with the shorter
    one.
    """
    collection = tree.collection
    members = tree.members
    for a_pos, a in enumerate(members):
        for b in members[a_pos + 1:]:
            pa, pb = collection[int(a)], collection[int(b)]
            if pa.scale == pb.scale and pa.spatial == pb.spatial:
                return False
    if tree.kind != OVERLAPPING:
        return True
    for a in members:
        for b in members:
            pa, pb = collection[int(a)], collection[int(b)]
            if pa.scale < pb.scale:
                if intervals_intersect(pa.omega, dilate(pb.lower.omega, collection.constants.c3)):
                    return False
    return True


def all_tops(collection: TileCollection) -> List[Top]:
    return [Top(scan.interval, float(xi)) for scan in scan_tops(collection) for xi in scan.xis]
