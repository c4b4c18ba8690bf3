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
"""Tests for covering efficiency, the major subset and distance shells."""

import numpy as np
import pytest

from carlesonlab.decomposition import (
    DecompositionResult,
    covering_efficiency,
    distance_shells,
    major_subset,
    random_cover,
)
from carlesonlab.weights import Weight


def test_random_cover__contains_every_bitile(two_scale_collection, rng):
    members = np.arange(0, len(two_scale_collection), 3)
    tops = random_cover(two_scale_collection, members, rng)
    assert tops == sorted(set(tops), key=lambda top: top.sort_key())
    for index in members:
        bitile = two_scale_collection[int(index)]
        assert any(top.interval.contains(bitile.spatial) and
                   bitile.omega[0] <= top.xi < bitile.omega[1] for top in tops)


def test_covering_efficiency(size_result, lebesgue, rng):
    result, _ = size_result
    assert covering_efficiency(result, lebesgue, rng) > 0


def test_covering_efficiency__nothing_selected(two_scale_collection, lebesgue, rng):
    result = DecompositionResult(two_scale_collection, [],
                                 np.ones(len(two_scale_collection), dtype=bool), 1.0, "size")
    assert covering_efficiency(result, lebesgue, rng) == 0


def test_major_subset__small_exceptional_set():
    w = Weight.lebesgue(64)
    f_support = np.zeros(64, dtype=bool)
    f_support[:4] = True
    g_support = np.ones(64, dtype=bool)
    result = major_subset(f_support, g_support, w)
    assert result.holds
    assert np.all(result.exceptional[f_support])
    assert not np.any(result.major & result.exceptional)
    assert w.mass_of(result.major) > 0.5


def test_major_subset__empty_f():
    w = Weight.lebesgue(64)
    g_support = np.arange(64) < 16
    result = major_subset(np.zeros(64, dtype=bool), g_support, w)
    assert not np.any(result.exceptional)
    assert np.array_equal(result.major, g_support)


def test_major_subset__reports_failure(caplog):
    w = Weight.lebesgue(64)
    support = np.arange(64) < 8
    result = major_subset(support, support, w, constant=0.5)
    assert not result.holds
    assert "Major subset" in caplog.text


def test_distance_shells__partition(two_scale_collection):
    exceptional = np.zeros(256, dtype=bool)
    exceptional[:64] = True
    shells = distance_shells(two_scale_collection, exceptional)
    indices = np.sort(np.concatenate(list(shells.values())))
    assert indices.tolist() == list(range(len(two_scale_collection)))
    assert min(shells) == 0


@pytest.mark.parametrize("covered, shell", [(False, 0), (True, 8)])
def test_distance_shells__extremes(two_scale_collection, covered, shell):
    shells = distance_shells(two_scale_collection, np.full(256, covered))
    assert list(shells) == [shell]
