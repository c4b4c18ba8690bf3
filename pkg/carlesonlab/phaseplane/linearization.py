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
"""Linearizations of the variational operators.

At every grid point x a linearization picks K(x) + 1 increasing thresholds
N_0(x) < ... < N_K(x) and coefficients d_1(x), ..., d_K(x) with Σ_j |d_j(x)|^{r'} = 1. It turns
the variational model operator into the linear operator C_P.
"""

import math
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import ExponentError, FormatError, SizingError
from ..fourier import check_grid_size


def dual_exponent(r: float) -> float:
    """r' with 1/r + 1/r' = 1."""
    if math.isnan(r) or r <= 1:
        raise ExponentError("r", r, "r > 1")
    if math.isinf(r):
        return 1.0
    return r / (r - 1)


class Linearization:
    """Per-point stopping thresholds with ℓ^{r'}-normalized coefficients.

    Rows are padded with NaN thresholds and zero coefficients. Column j of `coefficients` holds
    d_j; column 0 is always zero as N_0 carries no coefficient.

    Attributes:
        r:            Variation exponent the coefficients are normalized for.
        thresholds:   Array (N, K_max + 1), NaN padded.
        coefficients: Complex array (N, K_max + 1).
        counts:       K(x) for every grid point.
    """
    r: float
    thresholds: np.ndarray
    coefficients: np.ndarray
    counts: np.ndarray

    def __init__(self, thresholds: Sequence[Sequence[float]],
                 coefficients: Sequence[Sequence[complex]], r: float):
        n = check_grid_size(len(thresholds))
        if len(coefficients) != n:
            raise SizingError(len(coefficients), n)
        self.r = r
        r_dual = dual_exponent(r)
        width = max(1, max(len(row) for row in thresholds))
        self.thresholds = np.full((n, width), np.nan)
        self.coefficients = np.zeros((n, width), dtype=np.complex128)
        self.counts = np.zeros(n, dtype=np.int64)
        for x, (row, coefficient_row) in enumerate(zip(thresholds, coefficients)):
            row = np.asarray(row, dtype=np.float64)
            coefficient_row = np.asarray(coefficient_row, dtype=np.complex128)
            if row.shape[0] == 0:
                if coefficient_row.shape[0] != 0:
                    raise FormatError(f"coefficients without thresholds at point {x}")
                continue
            if coefficient_row.shape[0] != row.shape[0] - 1:
                raise FormatError(f"point {x} needs {row.shape[0] - 1} coefficients")
            if np.any(np.diff(row) <= 0):
                raise FormatError(f"thresholds at point {x} are not strictly increasing")
            if coefficient_row.shape[0] > 0:
                total = np.sum(np.abs(coefficient_row)**r_dual)
                if not math.isclose(total, 1.0, rel_tol=1e-9):
                    raise FormatError(f"coefficients at point {x} have ℓ^r' mass {total}")
            self.thresholds[x, :row.shape[0]] = row
            self.coefficients[x, 1:row.shape[0]] = coefficient_row
            self.counts[x] = coefficient_row.shape[0]
        self.thresholds.setflags(write=False)
        self.coefficients.setflags(write=False)

    @classmethod
    def random(cls,
               n: int,
               r: float,
               rng: np.random.Generator,
               max_count: int = 4,
               band: Optional[Tuple[float, float]] = None) -> "Linearization":
        """Seeded random linearization.

        K(x) is uniform on 0..max_count, the thresholds are distinct half-integers inside `band`
        (the whole spectrum by default) and the coefficients are complex Gaussians normalized in
        ℓ^{r'}.
        """
        check_grid_size(n)
        r_dual = dual_exponent(r)
        low, high = band if band is not None else (-n / 2 - 0.5, n / 2 - 0.5)
        candidates = np.arange(math.ceil(low - 0.5), math.floor(high - 0.5) + 1) + 0.5
        thresholds = []
        coefficients = []
        for _ in range(n):
            count = int(rng.integers(0, max_count + 1))
            count = min(count, candidates.shape[0] - 1)
            row = np.sort(rng.choice(candidates, size=count + 1, replace=False))
            d = rng.normal(size=count) + 1j * rng.normal(size=count)
            if count > 0:
                d = d / np.sum(np.abs(d)**r_dual)**(1 / r_dual)
            thresholds.append(row)
            coefficients.append(d)
        return cls(thresholds, coefficients, r)

    @classmethod
    def constant(cls, n: int, thresholds: Sequence[float], coefficients: Sequence[complex],
                 r: float) -> "Linearization":
        """The same thresholds and coefficients at every grid point."""
        return cls([thresholds] * n, [coefficients] * n, r)

    @classmethod
    def empty(cls, n: int, r: float) -> "Linearization":
        return cls([[]] * n, [[]] * n, r)

    @property
    def size(self) -> int:
        return self.thresholds.shape[0]

    @property
    def r_dual(self) -> float:
        return dual_exponent(self.r)

    def masses(self) -> np.ndarray:
        """|d_j(x)|^{r'}, same shape as `coefficients`."""
        return np.abs(self.coefficients)**self.r_dual

    def events(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Grid index, threshold N_j and mass |d_j|^{r'} of every coefficient j >= 1."""
        masses = self.masses()
        points, columns = np.nonzero(masses[:, 1:] > 0)
        columns = columns + 1
        return points, self.thresholds[points, columns], masses[points, columns]

    def frequency_mass(self, interval: Tuple[float, float]) -> np.ndarray:
        """Σ_{j: N_j(x) ∈ ω} |d_j(x)|^{r'} for every grid point."""
        inside = (self.thresholds[:, 1:] >= interval[0]) & (self.thresholds[:, 1:] < interval[1])
        return np.sum(np.where(inside, self.masses()[:, 1:], 0.0), axis=1)

    def within(self, low: float, high: float) -> bool:
        present = self.thresholds[~np.isnan(self.thresholds)]
        return bool(np.all((present >= low) & (present <= high)))
