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
"""Phase-plane model: tiles, bitiles, wave packets, trees, size, density and model operators."""

from .constants import AdmissibleConstants
from .io import load_collection, read_collection, save_collection, write_collection
from .linearization import Linearization, dual_exponent
from .norms import (
    IMPROVED,
    STANDARD,
    DensityIntegrand,
    bitile_energies,
    chi_tilde,
    density,
    density_with_top,
    local_average_bound,
    size,
    size_bound_ratio,
    size_with_top,
    tree_square_function,
)
from .operators import (
    SYMMETRIC,
    activation,
    bilinear_form,
    model_operator,
    variational_model_operator,
)
from .packets import (
    bump,
    packet_coefficients,
    packet_matrix,
    packet_spectrum,
    partition_bump,
    sampling_reconstruction,
    smooth_step,
    wave_packet,
)
from .tiles import (
    Bitile,
    Tile,
    TileCollection,
    build_bitile_collection,
    dilate,
    intervals_intersect,
    lattice_count,
)
from .trees import (
    LACUNARY,
    MIXED,
    OVERLAPPING,
    Top,
    Tree,
    all_tops,
    scan_tops,
    tree_remarks_hold,
)

__all__ = [
    "AdmissibleConstants", "Tile", "Bitile", "TileCollection", "build_bitile_collection",
    "lattice_count", "dilate", "intervals_intersect", "Linearization", "dual_exponent", "Top",
    "Tree", "all_tops", "scan_tops", "tree_remarks_hold", "OVERLAPPING", "LACUNARY", "MIXED",
    "bump", "smooth_step", "packet_spectrum", "wave_packet", "packet_matrix",
    "packet_coefficients", "partition_bump", "sampling_reconstruction", "tree_square_function",
    "bitile_energies", "chi_tilde", "DensityIntegrand", "local_average_bound", "size",
    "size_with_top", "density", "density_with_top", "size_bound_ratio", "STANDARD", "IMPROVED",
    "SYMMETRIC", "activation", "model_operator", "bilinear_form", "variational_model_operator",
    "read_collection", "write_collection", "save_collection", "load_collection"
]
