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
"""Tests for the weight class and Littlewood-Paley studies."""

import math

import pytest

from carlesonlab.harness import ExperimentConfig, apconst_report, lepingle_report, sharp_equivalence
from carlesonlab.harness.studies import drift, single_scale_ratio
from carlesonlab.weights import Weight, power_weight

from ..shared import ProgressMock

RANDOM = {"kind": "random", "degree": 4}


@pytest.mark.parametrize("first, last, expected", [(0, 0, 0), (2, 3, 0.5), (4, 2, 0.5)])
def test_drift(first, last, expected):
    assert drift(first, last) == pytest.approx(expected)


def test_drift__from_zero():
    assert drift(0, 1) == math.inf


@pytest.mark.parametrize("n", [32, 64])
def test_single_scale_ratio(n):
    assert single_scale_ratio(n, 2.0, 3.0, 2.0, Weight.lebesgue(n)) == pytest.approx(1, abs=1e-9)
    assert single_scale_ratio(n, 2.0, 3.0, 2.0, power_weight(0.5, n)) == pytest.approx(1,
                                                                                       abs=1e-9)


def test_sharp_equivalence(weight_factory):
    progress = ProgressMock()
    window, maximal_ratio = sharp_equivalence(RANDOM, 2.0, weight_factory(32), 3, 0, progress)
    assert 1 <= window < math.inf
    assert maximal_ratio >= 1 - 1e-12
    assert progress.total == progress.ready == 3


def test_apconst_report():
    config = ExperimentConfig(n=32, n_grid=[16, 32], weight_grid=[0.0, 0.5], family=RANDOM,
                              trials=2, partial_n=4)
    report = apconst_report(config)
    table = report.tables["weights"]
    assert table.columns[:3] == ["a", "n", "ap"]
    assert len(table.rows) == 4
    lebesgue = [row for row in table.rows if row[0] == 0.0]
    assert all(row[2] == pytest.approx(1) for row in lebesgue)
    assert report.monitors["ap_dyadic_within_2_a=0.0_n=16"].ok
    assert "sharp_window_drift_a=0.5" in report.monitors
    assert len(report.plots) == 1


def test_lepingle_report():
    config = ExperimentConfig(n=32, n_grid=[32, 64], weight_grid=[0.0, 0.5], r_grid=[3.0],
                              p_grid=[2.0], family=RANDOM, trials=2, partial_n=4)
    report = lepingle_report(config)
    assert len(report.tables["maxima"].rows) == 2 * 2
    assert [row[0] for row in report.tables["sharp"].rows] == [32, 64]
    for n in (32, 64):
        assert report.monitors[f"single_scale_n={n}"].ok
        assert report.monitors[f"sharp_constant_finite_n={n}"].ok
    assert report.monitors["finite_a=0.0_r=3.0_p=2.0"].ok
    assert "drift_a=0.5_r=3.0_p=2.0" in report.monitors
