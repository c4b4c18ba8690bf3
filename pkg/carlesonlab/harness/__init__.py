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
"""Experiment configuration, orchestration and reports."""

from .decomposition_report import (
    make_instance,
    random_trees,
    run_decomposition_report,
    tree_estimate_report,
)
from .experiment import ExperimentConfig, load_experiment
from .families import make_family, make_signal, make_weight, trial_rng
from .ratios import estimate_norm_ratio, loglog_slope, norm_ratios, operator_for, sweep_r
from .report import ExperimentReport, load_report
from .studies import apconst_report, lepingle_report, sharp_equivalence
from .trials import run_trials

__all__ = [
    "ExperimentConfig", "load_experiment", "ExperimentReport", "load_report", "make_signal",
    "make_family", "make_weight", "trial_rng", "run_trials", "operator_for", "norm_ratios",
    "estimate_norm_ratio", "loglog_slope", "sweep_r", "make_instance", "random_trees",
    "run_decomposition_report", "tree_estimate_report", "apconst_report", "lepingle_report",
    "sharp_equivalence"
]
