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
"""Greedy decompositions into trees, counting functions and tree-estimate monitors."""

from .counting import (
    TopIntervalGrowth,
    counting_function,
    counting_tail_slope,
    dilated_mask,
    top_interval_growth,
)
from .density import density_decompose, top_mass_budget
from .io import load_decomposition, replay_decomposition, save_decomposition
from .monitors import MajorSubset, covering_efficiency, distance_shells, major_subset, random_cover
from .result import DENSITY, SIZE, Certificate, DecompositionResult, SelectedTree
from .separation import SeparationReport, check_well_separated, separated_trees_ratio
from .size import size_decompose
from .tree_estimate import (
    CORE,
    TreeEstimate,
    bitiles_disjoint,
    region_mask,
    tree_bmo_ratio,
    tree_estimate_ratio,
    weak_l1_average,
)
from .two_parameter import Level, aggregation_ratio, level_bilinear_sum, two_parameter_decompose

__all__ = [
    "SIZE", "DENSITY", "Certificate", "SelectedTree", "DecompositionResult", "size_decompose",
    "density_decompose", "top_mass_budget", "counting_function", "dilated_mask",
    "top_interval_growth", "TopIntervalGrowth", "counting_tail_slope", "check_well_separated",
    "SeparationReport", "separated_trees_ratio", "two_parameter_decompose", "Level",
    "level_bilinear_sum", "aggregation_ratio", "tree_estimate_ratio", "TreeEstimate", "CORE",
    "region_mask", "bitiles_disjoint", "tree_bmo_ratio", "weak_l1_average", "covering_efficiency",
    "random_cover", "major_subset", "MajorSubset", "distance_shells", "save_decomposition",
    "load_decomposition", "replay_decomposition"
]
