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
"""Weight classes: A_p constants, doubling exponents, weighted norms, maximal and sharp
functions."""

from .dyadic import DyadicGrid, DyadicInterval
from .functions import average, dyadic_sharp, maximal, weighted_lp_norm
from .muckenhoupt import a_infinity_exponent, ap_constant, ap_constant_exhaustive, doubling_exponent
from .weight import Weight, power_weight

__all__ = [
    "DyadicGrid", "DyadicInterval", "Weight", "power_weight", "ap_constant",
    "ap_constant_exhaustive", "doubling_exponent", "a_infinity_exponent", "weighted_lp_norm",
    "maximal", "dyadic_sharp", "average"
]
