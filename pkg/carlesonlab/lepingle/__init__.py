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
"""Littlewood-Paley families and the weighted variational inequality."""

from .family import LPFamily, band_symbols, check_band_constant, lp_family, transition_width
from .ratio import (
    SharpCheck,
    lepingle_ratio,
    sharp_function_check,
    square_field,
    variational_field,
    variational_lp_norm,
)

__all__ = [
    "LPFamily", "lp_family", "band_symbols", "check_band_constant", "transition_width",
    "variational_field", "square_field", "variational_lp_norm", "lepingle_ratio",
    "sharp_function_check", "SharpCheck"
]
