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
"""Strictly positive weights on the cyclic grid."""

import csv
import logging
import os
from pathlib import Path
from typing import Callable, Dict, Hashable, List, Union

import numpy as np

from ..errors import ExponentError, FormatError
from ..fourier import Signal, check_grid_size, grid_points
from .dyadic import DyadicInterval

logger = logging.getLogger(__name__)


class Weight:
    """Positive weight w sampled at the grid points.

    Interval masses w(I) = Σ_{x_i ∈ I} w(x_i)/N are read from a cumulative table, which also
    gives the mass of intervals with arbitrary real endpoints (the weight is constant on every
    grid cell) on the periodically extended weight. Derived quantities such as A_p constants are
    memoized per weight.

    Attributes:
        samples: Read-only weight values.
    """
    samples: np.ndarray

    _cumulative: np.ndarray
    _level_masses: List[np.ndarray]
    _cache: Dict[Hashable, float]

    def __init__(self, samples):
        samples = np.array(samples, dtype=np.float64)
        if samples.ndim != 1:
            raise FormatError("weight samples must be one dimensional")
        check_grid_size(samples.shape[0])
        if not np.all(np.isfinite(samples)) or np.any(samples <= 0):
            raise FormatError("weight samples must be finite and strictly positive")
        samples.setflags(write=False)
        self.samples = samples

        n = samples.shape[0]
        self._cumulative = np.concatenate([[0.0], np.cumsum(samples) / n])
        self._level_masses = []
        masses = samples / n
        while True:
            self._level_masses.insert(0, masses)
            if masses.shape[0] == 1:
                break
            masses = masses.reshape(-1, 2).sum(axis=1)
        self._cache = {}

    @classmethod
    def lebesgue(cls, n: int) -> "Weight":
        return cls(np.ones(check_grid_size(n)))

    @property
    def size(self) -> int:
        return self.samples.shape[0]

    @property
    def total(self) -> float:
        return float(self._cumulative[-1])

    def as_signal(self) -> Signal:
        return Signal(self.samples)

    def level_masses(self, level: int) -> np.ndarray:
        """Masses of all unshifted dyadic intervals of generation `level`, left to right."""
        return self._level_masses[level]

    def mass(self, interval: DyadicInterval) -> float:
        start, stop = interval.grid_range(self.size)
        return float(self._cumulative[stop] - self._cumulative[start])

    def cumulative(self, t):
        """w([0, t)) for real `t`, extended periodically: w([0, t + 1)) = w([0, t)) + w(T)."""
        t = np.asarray(t, dtype=np.float64)
        whole = np.floor(t)
        inside = (t - whole) * self.size
        return whole * self.total + np.interp(inside, np.arange(self.size + 1), self._cumulative)

    def measure(self, start, stop):
        """w([start, stop)) on the periodically extended weight."""
        return self.cumulative(stop) - self.cumulative(start)

    def mass_of(self, mask: np.ndarray) -> float:
        """w(G) for the set of grid points selected by `mask`."""
        return float(np.sum(self.samples[np.asarray(mask, dtype=bool)]) / self.size)

    def memoized(self, key: Hashable, compute: Callable[[], float]) -> float:
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def scaled(self, factor: float) -> "Weight":
        return Weight(self.samples * factor)

    def to_csv(self, file_name: Union[os.PathLike, str]) -> None:
        """Write the weight as two columns `x` and `w`, full precision."""
        with Path(file_name).open(mode="w", encoding="utf-8", newline="") as csv_file:
            writer = csv.writer(csv_file)
            writer.writerow(["x", "w"])
            for x, w in zip(grid_points(self.size), self.samples):
                writer.writerow([repr(float(x)), repr(float(w))])

    @classmethod
    def from_csv(cls, file_name: Union[os.PathLike, str]) -> "Weight":
        """Read a weight written by `to_csv`.

        Raises:
            FormatError: Columns are missing, or the `x` column is not the grid.
        """
        with Path(file_name).open(mode="r", encoding="utf-8") as csv_file:
            reader = csv.DictReader(csv_file)
            if reader.fieldnames is None or not {"x", "w"} <= set(reader.fieldnames):
                raise FormatError(f"{file_name} does not have columns x and w")
            try:
                rows = [(float(row["x"]), float(row["w"])) for row in reader]
            except (TypeError, ValueError) as e:
                raise FormatError(f"{file_name} contains a non-numeric value: {e}") from e
        xs = np.array([x for x, _ in rows])
        if xs.shape[0] < 8 or not np.allclose(xs, grid_points(xs.shape[0]), atol=1e-12):
            raise FormatError(f"{file_name} is not sampled on a uniform grid starting at 0")
        logger.debug(f"Loaded weight with {xs.shape[0]} samples from {file_name}")
        return cls([w for _, w in rows])

    def __repr__(self) -> str:
        return f"Weight(size={self.size})"


def power_weight(a: float, n: int) -> Weight:
    """w(x) = (d(x) + 1/(2N))^a with d(x) = min(x, 1 - x) the torus distance to 0.

    Raises:
        ExponentError: `a` outside (-0.95, 5).
    """
    if not -0.95 < a < 5:
        raise ExponentError("a", a, "-0.95 < a < 5")
    x = grid_points(check_grid_size(n))
    return Weight((np.minimum(x, 1 - x) + 1 / (2 * n))**a)
