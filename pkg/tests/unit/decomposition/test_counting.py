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
"""Tests for counting functions of tree tops."""

import numpy as np
import pytest

from carlesonlab.decomposition import (
    counting_function,
    counting_tail_slope,
    dilated_mask,
    top_interval_growth,
)
from carlesonlab.errors import ExponentError
from carlesonlab.phaseplane import Top
from carlesonlab.weights import DyadicInterval, Weight


def test_dilated_mask__interval_itself():
    assert np.flatnonzero(dilated_mask(DyadicInterval(2, 1), 1.0, 16)).tolist() == [4, 5, 6, 7]


def test_dilated_mask__concentric():
    mask = dilated_mask(DyadicInterval(2, 1), 2.0, 16)
    assert np.flatnonzero(mask).tolist() == list(range(2, 10))


def test_dilated_mask__wraps_around():
    mask = dilated_mask(DyadicInterval(2, 0), 2.0, 16)
    assert np.flatnonzero(mask).tolist() == [0, 1, 2, 3, 4, 5, 14, 15]


def test_dilated_mask__whole_torus():
    assert np.all(dilated_mask(DyadicInterval(2, 0), 8.0, 16))


def test_counting_function():
    tops = [Top(DyadicInterval(1, 0), 0.0), Top(DyadicInterval(2, 1), 0.0)]
    counts = counting_function(tops, 0, 16).samples
    assert counts.tolist() == [1] * 4 + [2] * 4 + [0] * 8


def test_counting_function__rejects_negative_dilation():
    with pytest.raises(ExponentError):
        counting_function([], -1, 16)


def test_top_interval_growth__single_top():
    growth = top_interval_growth([Top(DyadicInterval(3, 0), 0.0)], Weight.lebesgue(64))
    assert growth.norms == pytest.approx([1 / 8, 1 / 4, 1 / 2, 1])
    assert growth.beta == pytest.approx(1.0)


def test_top_interval_growth__no_trees():
    growth = top_interval_growth([], Weight.lebesgue(64))
    assert growth.norms == [0, 0, 0, 0]
    assert growth.beta == 0


def test_counting_tail_slope__nested_tops():
    tops = [Top(DyadicInterval(level, 0), 0.0) for level in range(4)]
    assert counting_tail_slope(tops, Weight.lebesgue(64)) < 0
    assert counting_tail_slope(tops[:1], Weight.lebesgue(64)) == 0
