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
"""Certified decomposition pipeline and tree-estimate studies on generated instances."""

import logging
import math
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
from tqdm import tqdm

from ..decomposition import (
    CORE,
    check_well_separated,
    counting_tail_slope,
    covering_efficiency,
    density_decompose,
    distance_shells,
    level_bilinear_sum,
    major_subset,
    replay_decomposition,
    save_decomposition,
    separated_trees_ratio,
    size_decompose,
    top_interval_growth,
    top_mass_budget,
    tree_bmo_ratio,
    tree_estimate_ratio,
    two_parameter_decompose,
)
from ..decomposition.result import CERTIFICATE_TOLERANCE, DecompositionResult
from ..errors import CertificateError
from ..fourier import Signal
from ..phaseplane import (
    Linearization,
    TileCollection,
    Tree,
    all_tops,
    bilinear_form,
    build_bitile_collection,
    density,
    size,
)
from ..weights import DyadicGrid, Weight
from .experiment import ExperimentConfig
from .families import make_signal, make_weight, trial_rng
from .ratios import loglog_slope
from .report import ExperimentReport

logger = logging.getLogger(__name__)

RECONSTRUCTION_TOLERANCE = 1e-9


class Instance:
    """One generated input of the decomposition pipeline."""
    def __init__(self, collection: TileCollection, f: Signal, g: Signal, w: Weight,
                 lin: Linearization):
        self.collection = collection
        self.f = f
        self.g = g
        self.w = w
        self.lin = lin


def make_instance(config: ExperimentConfig, n: Optional[int] = None, trial: int = 0) -> Instance:
    """Seeded collection, signals, weight and linearization for one trial."""
    n = n or config.n
    rng = trial_rng(config.seed, trial)
    w = make_weight(config.weight, n)
    collection = build_bitile_collection(DyadicGrid(n), scales=config.scales)
    collection = collection.random_subset(config.max_bitiles, rng)
    f = make_signal(config.family, n, rng)
    g = make_signal(config.family, n, rng)
    lin = Linearization.random(n, config.r, rng)
    return Instance(collection, f, g, w, lin)


def run_decomposition_report(config: ExperimentConfig,
                             progress: Optional[tqdm] = None) -> ExperimentReport:
    """Run size, density and two-parameter decompositions and collect their monitors."""
    report = ExperimentReport("decompose", config.as_dict(), config.digest(), config.seed)
    report.annotations.update(config.annotations())
    instance = make_instance(config)
    collection, f, g, w, lin = (instance.collection, instance.f, instance.g, instance.w,
                                instance.lin)
    report.summary["bitiles"] = len(collection)
    if len(collection) == 0:
        logger.info("Empty collection, nothing to decompose")
        return report

    _size_stage(report, config, instance, progress)
    _density_stage(report, config, instance, progress)
    _two_parameter_stage(report, config, instance, progress)

    exceptional = major_subset(f.samples != 0, g.samples != 0, w)
    report.monitor("major_subset", float(exceptional.holds), ok=exceptional.holds)
    shells = distance_shells(collection, exceptional.exceptional)
    report.add_table("distance_shells", ["k", "bitiles"],
                     [[k, int(members.shape[0])] for k, members in shells.items()])
    report.summary["bilinear_form"] = abs(bilinear_form(collection, f, g, w, lin))
    return report


def _size_stage(report: ExperimentReport, config: ExperimentConfig, instance: Instance,
                progress: Optional[tqdm]) -> None:
    collection, f, w = instance.collection, instance.f, instance.w
    full_size = size(collection, f, w)
    report.summary["size"] = full_size
    if full_size == 0:
        return
    alpha = config.alpha or full_size / 2
    result = size_decompose(collection, f, w, alpha, progress)
    result.verify()
    _save_and_replay(report, config, result, instance)
    remainder = size(result.remainder_collection(), f, w)
    report.summary["size_trees"] = len(result)
    report.monitor("size_remainder", remainder, alpha, ok=remainder < alpha)
    separation = check_well_separated(result.witnesses)
    report.monitor("size_witnesses_separated", float(separation.ok), ok=separation.ok)
    report.monitor("separated_trees_ratio", separated_trees_ratio(result.witnesses, f),
                   config.monitor_constant)
    rng = trial_rng(config.seed, 1 << 20)
    report.monitor("covering_efficiency", covering_efficiency(result, w, rng),
                   config.monitor_constant)
    growth = top_interval_growth(result.trees, w, 1.0, config.tail_shells + 1)
    report.add_table("top_interval_growth", ["k", "norm"], list(enumerate(growth.norms)))
    report.summary["top_interval_beta"] = growth.beta
    report.summary["counting_tail_slope"] = counting_tail_slope(result.trees, w)

    rows = []
    for number, tree in enumerate(result.trees):
        for shell in [CORE] + list(range(1, config.tail_shells + 1)):
            estimate = tree_estimate_ratio(tree, f, instance.g, w, instance.lin, 1.0, shell)
            rows.append([number, shell, estimate.ratio, estimate.improved, estimate.degenerate])
    report.add_table("tree_estimates", ["tree", "shell", "ratio", "improved", "degenerate"], rows)


def _density_stage(report: ExperimentReport, config: ExperimentConfig, instance: Instance,
                   progress: Optional[tqdm]) -> None:
    collection, g, w, lin = instance.collection, instance.g, instance.w, instance.lin
    full_density = density(collection, g, w, lin)
    report.summary["density"] = full_density
    if full_density == 0:
        return
    alpha = full_density / 2
    result = density_decompose(collection, g, w, lin, alpha, progress)
    result.verify()
    _save_and_replay(report, config, result, instance)
    remainder = density(result.remainder_collection(), g, w, lin)
    report.summary["density_selections"] = len(result)
    report.monitor("density_remainder", remainder, alpha * (1 + CERTIFICATE_TOLERANCE))
    tops = [selection.top for selection in result.selected]
    report.monitor("density_tops_disjoint", float(tops_disjoint(tops)), ok=tops_disjoint(tops))
    budget = top_mass_budget(g, w, lin, alpha)
    report.monitor("density_top_mass_ratio", result.top_mass(w) / budget if budget else 0.0,
                   config.monitor_constant)


def _save_and_replay(report: ExperimentReport, config: ExperimentConfig,
                     result: DecompositionResult, instance: Instance) -> None:
    """Write `result` to the configured directory and recheck it from the written file."""
    if config.save_decomposition is None:
        return
    directory = Path(config.save_decomposition)
    directory.mkdir(parents=True, exist_ok=True)
    file_name = directory / f"{result.kind}.json"
    save_decomposition(result, file_name)
    report.annotations[f"{result.kind}_decomposition_file"] = str(file_name)
    try:
        replay_decomposition(file_name, instance.w, instance.f, instance.g, instance.lin)
        replayed = True
    except CertificateError as error:
        logger.error(f"Saved {result.kind} decomposition does not replay: {error}")
        replayed = False
    report.monitor(f"{result.kind}_replay", float(replayed), ok=replayed)


def tops_disjoint(tops) -> bool:
    """Whether the rectangles I_T × ω_T are pairwise disjoint."""
    for position, first in enumerate(tops):
        for second in tops[position + 1:]:
            if first.interval.intersects(second.interval):
                low = max(first.omega[0], second.omega[0])
                high = min(first.omega[1], second.omega[1])
                if low < high:
                    return False
    return True


def _two_parameter_stage(report: ExperimentReport, config: ExperimentConfig, instance: Instance,
                         progress: Optional[tqdm]) -> None:
    if not config.r > 2 * config.q0:
        report.annotations["two_parameter"] = f"skipped: r = {config.r} <= 2 q0"
        return
    collection, f, g, w, lin = (instance.collection, instance.f, instance.g, instance.w,
                                instance.lin)
    levels = two_parameter_decompose(collection, f, g, w, lin, config.q0, config.r, progress)
    whole = bilinear_form(collection, f, g, w, lin)
    error = abs(whole - level_bilinear_sum(levels, collection, f, g, w, lin))
    report.monitor("level_reconstruction_error", error,
                   RECONSTRUCTION_TOLERANCE * max(1.0, abs(whole)))
    report.add_table("levels", ["n", "trees", "bitiles", "size", "size_bound", "density",
                                "density_bound", "top_mass"],
                     [[n, len(level.trees), int(level.members.shape[0]), level.size,
                       level.size_bound, level.density, level.density_bound, level.top_mass(w)]
                      for n, level in sorted(levels.items())])


def random_trees(collection: TileCollection, count: int, rng: np.random.Generator) -> List[Tree]:
    """Maximal trees of `count` tops drawn uniformly from all tops with nonempty trees."""
    tops = all_tops(collection)
    if not tops:
        return []
    chosen = rng.choice(len(tops), size=min(count, len(tops)), replace=False)
    return [Tree.maximal(collection, tops[int(i)]) for i in chosen]


def tree_estimate_report(config: ExperimentConfig,
                         progress: Optional[tqdm] = None) -> ExperimentReport:
    """Largest tree-estimate ratios per N and their fitted growth against N."""
    report = ExperimentReport("tree-estimate", config.as_dict(), config.digest(), config.seed)
    rows = []
    maxima: Dict[str, List[float]] = {"core": [], "tail": [], "improved": []}
    s = 1.0
    if progress is not None:
        progress.total = len(config.n_grid) * config.trials
    for n in config.n_grid:
        instance = make_instance(config, n)
        trees = random_trees(instance.collection, config.trials, trial_rng(config.seed, n))
        best = {"core": 0.0, "tail": 0.0, "improved": 0.0}
        bmo = 0.0
        for tree in trees:
            core = tree_estimate_ratio(tree, instance.f, instance.g, instance.w, instance.lin, s)
            best["core"] = max(best["core"], core.ratio)
            if core.improved is not None:
                best["improved"] = max(best["improved"], core.improved)
            for shell in range(1, config.tail_shells + 1):
                tail = tree_estimate_ratio(tree, instance.f, instance.g, instance.w,
                                           instance.lin, s, shell)
                best["tail"] = max(best["tail"], tail.ratio)
            bmo = max(bmo, tree_bmo_ratio(tree, instance.f, instance.w))
            if progress is not None:
                progress.update()
        rows.append([n, len(trees), best["core"], best["tail"], best["improved"], bmo])
        for name, value in best.items():
            maxima[name].append(value)

    report.add_table("maxima", ["n", "trees", "core", "tail", "improved", "bmo"], rows)
    for name, values in maxima.items():
        slope = loglog_slope(config.n_grid, values)
        report.summary[f"{name}_slope"] = slope
        if not math.isnan(slope):
            report.monitor(f"{name}_growth", abs(slope), 0.2)
    report.add_plot("Largest tree-estimate ratio", "N", "ratio",
                    {name: list(zip(config.n_grid, values)) for name, values in maxima.items()})
    return report
