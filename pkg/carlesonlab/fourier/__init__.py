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
"""Discrete torus Fourier analysis: transforms, partial sums and variation norms."""

from .partial_sums import (
    carleson_maximal,
    partial_sum,
    partial_sum_table,
    threshold_values,
    truncation_table,
    variational_partial_sums,
    variational_truncation,
)
from .signal import (
    Signal,
    Spectrum,
    check_frequency,
    check_grid_size,
    check_same_size,
    dft,
    frequencies,
    grid_points,
    idft,
    samples_of,
)
from .variation import check_variation_exponent, variation_along_axis, variation_norm

__all__ = [
    "Signal", "Spectrum", "dft", "idft", "grid_points", "frequencies", "check_grid_size",
    "check_frequency", "check_same_size", "samples_of", "partial_sum", "partial_sum_table",
    "truncation_table", "threshold_values", "carleson_maximal", "variational_partial_sums",
    "variational_truncation", "variation_norm", "variation_along_axis",
    "check_variation_exponent"
]
