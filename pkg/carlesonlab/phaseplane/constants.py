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
"""Admissible constants of the bitile model."""

import math
from typing import Optional

from ..errors import ConstantsError
from ..model import ModelBase
from ..weights import Weight, doubling_exponent


class AdmissibleConstants(ModelBase):
    """Dilation and separation constants shared by a collection of bitiles.

    The classical setting is C2 = C21 = C22 = C1 = 1. K0 must exceed 2/(C2 - C3) when C2 > C3,
    and the density decay exponent D must exceed γ(w) + 10; when D is not given it is taken as
    γ(w) + 12 for the weight in use.

    Attributes:
        c2:  Dilation of the tiles in the hull ω̃_P and in the 2-overlapping test.
        c3:  Dilation bounding the frequency support of the wave packets.
        c21: Dilation of the lower tile in ω_P.
        c22: Dilation of the upper tile in ω_P.
        c1:  Bound |ω_P| <= C1 (|ω_P1| + |ω_P2|).
        k0:  Scale separation constant.
        d:   Density decay exponent, or None to derive it from the weight.
    """
    c2: float = 1.0
    c3: float = 0.9
    c21: float = 1.0
    c22: float = 1.0
    c1: float = 1.0
    k0: float = 24.0
    d: Optional[float] = None

    def __init__(self, **kwargs):
        super().__init__(**{name: None if value is None else float(value)
                            for name, value in kwargs.items()})
        self.validate()

    def validate(self) -> None:
        """Raises:
            ConstantsError: The constants are not admissible.
        """
        if not self.c2 >= 1:
            raise ConstantsError(f"C2 = {self.c2} must be at least 1")
        if not 0 < self.c3 < self.c2:
            raise ConstantsError(f"C3 = {self.c3} must lie in (0, C2)")
        for name in ("c21", "c22", "c1"):
            if not getattr(self, name) >= self.c2:
                raise ConstantsError(f"{name.upper()} = {getattr(self, name)} must be at least C2")
        if not self.k0 > 2 / (self.c2 - self.c3):
            raise ConstantsError(f"K0 = {self.k0} must exceed 2/(C2 - C3) = "
                                 f"{2 / (self.c2 - self.c3)}")
        if self.bitile_width_factor > self.c1 * 2:
            raise ConstantsError(f"|ω_P| = {self.bitile_width_factor} |ω_P1| exceeds "
                                 f"C1 (|ω_P1| + |ω_P2|)")

    @property
    def tile_gap(self) -> int:
        """Offset, in tile widths, from the lower to the upper tile of a bitile."""
        return max(1, math.ceil(self.c2))

    @property
    def bitile_width_factor(self) -> float:
        """|ω_P| / |ω_P1|."""
        return self.tile_gap + (self.c21 + self.c22) / 2

    @property
    def bitile_stride(self) -> int:
        """Distance, in tile widths, between the lower tiles of neighboring bitiles of one scale."""
        stride = 1
        while stride < self.bitile_width_factor:
            stride *= 2
        return stride

    @property
    def is_classical(self) -> bool:
        return self.c2 == self.c21 == self.c22 == self.c1 == 1

    def minimal_scale_gap(self) -> int:
        """Smallest number of generations between scales that keeps distinct scales K0 apart."""
        return math.floor(math.log2(self.k0 * self.bitile_width_factor)) + 1

    def decay_exponent(self, w: Weight) -> float:
        """D for weight `w`.

        Raises:
            ConstantsError: An explicit D does not exceed γ(w) + 10.
        """
        gamma = doubling_exponent(w)
        if self.d is None:
            return gamma + 12
        if not self.d > gamma + 10:
            raise ConstantsError(f"D = {self.d} must exceed γ + 10 = {gamma + 10}")
        return self.d

    def __eq__(self, other) -> bool:
        return isinstance(other, AdmissibleConstants) and self.as_dict() == other.as_dict()

    def __repr__(self) -> str:
        values = ", ".join(f"{k}={v}" for k, v in self.as_dict().items())
        return f"AdmissibleConstants({values})"
