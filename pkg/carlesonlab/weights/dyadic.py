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
"""Dyadic intervals of the unit torus down to grid scale."""

from typing import Iterator, List, NamedTuple, Optional, Tuple

from ..errors import ExponentError, IntervalError
from ..fourier import check_grid_size


class DyadicInterval(NamedTuple):
    """The interval [k 2^{-l}, (k + 1) 2^{-l}), or its copy shifted right by half its length.

    Attributes:
        level:   Generation l; the length is 2^{-l}.
        index:   Position k within the generation.
        shifted: Shifted right by 2^{-l-1}.
    """
    level: int
    index: int
    shifted: bool = False

    @property
    def length(self) -> float:
        return 2.0**-self.level

    @property
    def start(self) -> float:
        return (self.index + (0.5 if self.shifted else 0.0)) * self.length

    @property
    def stop(self) -> float:
        return self.start + self.length

    @property
    def center(self) -> float:
        return self.start + self.length / 2

    def grid_range(self, n: int) -> Tuple[int, int]:
        """First and one-past-last grid index covered on a grid of length `n`."""
        points = n >> self.level
        offset = points // 2 if self.shifted else 0
        start = self.index * points + offset
        return start, start + points

    def parent(self) -> Optional["DyadicInterval"]:
        if self.level == 0 or self.shifted:
            return None
        return DyadicInterval(self.level - 1, self.index // 2)

    def children(self) -> Tuple["DyadicInterval", "DyadicInterval"]:
        if self.shifted:
            raise IntervalError("shifted intervals have no dyadic children")
        return (DyadicInterval(self.level + 1, 2 * self.index),
                DyadicInterval(self.level + 1, 2 * self.index + 1))

    def contains(self, other: "DyadicInterval") -> bool:
        return self.start <= other.start and other.stop <= self.stop

    def intersects(self, other: "DyadicInterval") -> bool:
        return self.start < other.stop and other.start < self.stop


class DyadicGrid:
    """The dyadic intervals of [0, 1) with endpoints on a grid of length `n`.

    Half-shifted copies are included only when they fit inside [0, 1) and have grid endpoints.
    """
    n: int
    depth: int

    def __init__(self, n: int):
        self.n = check_grid_size(n)
        self.depth = n.bit_length() - 1

    def intervals(self, level: int) -> List[DyadicInterval]:
        self._check_level(level)
        return [DyadicInterval(level, k) for k in range(1 << level)]

    def shifted_intervals(self, level: int) -> List[DyadicInterval]:
        self._check_level(level)
        if level == self.depth:
            return []
        return [DyadicInterval(level, k, True) for k in range((1 << level) - 1)]

    def containing(self, point_index: int, level: int) -> DyadicInterval:
        """The unshifted interval of generation `level` containing grid point `point_index`."""
        self._check_level(level)
        return DyadicInterval(level, point_index >> (self.depth - level))

    def __iter__(self) -> Iterator[DyadicInterval]:
        for level in range(self.depth + 1):
            yield from self.intervals(level)

    def all_intervals(self, include_shifted: bool = True) -> Iterator[DyadicInterval]:
        for level in range(self.depth + 1):
            yield from self.intervals(level)
            if include_shifted:
                yield from self.shifted_intervals(level)

    def _check_level(self, level: int) -> None:
        if not 0 <= level <= self.depth:
            raise ExponentError("level", level, f"0 <= level <= {self.depth}")
