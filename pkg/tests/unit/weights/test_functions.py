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
"""Tests for weighted norms, maximal functions and the dyadic sharp function."""

import math

import numpy as np
import pytest

from carlesonlab.errors import ConfigError, ExponentError, SizingError
from carlesonlab.fourier import Signal
from carlesonlab.weights import (
    Weight,
    average,
    dyadic_sharp,
    maximal,
    power_weight,
    weighted_lp_norm,
)


def maximal_exhaustive(values, t=1.0, weights=None):
    """Largest t-average over every grid-aligned interval containing each point."""
    n = len(values)
    weights = np.ones(n) if weights is None else weights
    result = np.zeros(n)
    for start in range(n):
        for stop in range(start + 1, n + 1):
            value = (np.sum(np.abs(values[start:stop])**t * weights[start:stop]) /
                     np.sum(weights[start:stop]))**(1 / t)
            result[start:stop] = np.maximum(result[start:stop], value)
    return result


def test_weighted_lp_norm__constant():
    assert weighted_lp_norm(np.ones(8), 2) == pytest.approx(1)
    assert weighted_lp_norm(np.ones(8), 3, Weight.lebesgue(8)) == pytest.approx(1)


def test_weighted_lp_norm__homogeneous():
    rng = np.random.default_rng(12)
    f = Signal(rng.normal(size=32))
    w = power_weight(0.5, 32)
    assert weighted_lp_norm(2 * f, 1.5, w) == pytest.approx(2 * weighted_lp_norm(f, 1.5, w))


def test_weighted_lp_norm__direct_sum():
    rng = np.random.default_rng(13)
    values = rng.normal(size=16) + 1j * rng.normal(size=16)
    w = power_weight(0.75, 16)
    expected = math.sqrt(np.sum(np.abs(values)**2 * w.samples) / 16)
    assert weighted_lp_norm(values, 2, w) == pytest.approx(expected)


def test_weighted_lp_norm__infinity():
    assert weighted_lp_norm(np.array([0, -3, 1, 2, 0, 0, 0, 0]), math.inf) == 3


def test_weighted_lp_norm__rejects():
    with pytest.raises(ExponentError):
        weighted_lp_norm(np.ones(8), 0.5)
    with pytest.raises(SizingError):
        weighted_lp_norm(np.ones(8), 2, Weight.lebesgue(16))


@pytest.mark.parametrize("t", [1.0, 2.0, 3.5])
def test_maximal__constant(t):
    w = power_weight(0.5, 16)
    assert np.allclose(maximal(np.full(16, -2.0), t).samples, 2)
    assert np.allclose(maximal(np.full(16, -2.0), t, "weighted", w).samples, 2)


def test_maximal__indicator():
    f = np.zeros(64)
    f[:16] = 1
    values = maximal(f).samples
    assert values[31] == pytest.approx(0.5)
    assert values[32] == pytest.approx(16 / 33)


@pytest.mark.parametrize("t", [1.0, 2.0])
def test_maximal__matches_exhaustive(t):
    rng = np.random.default_rng(14)
    values = rng.normal(size=32)
    w = power_weight(0.5, 32)
    assert np.allclose(maximal(values, t).samples, maximal_exhaustive(values, t))
    assert np.allclose(
        maximal(values, t, "weighted", w).samples, maximal_exhaustive(values, t, w.samples))


def test_maximal__increasing_in_t():
    rng = np.random.default_rng(15)
    values = rng.normal(size=64)
    assert np.all(maximal(values, 2.0).samples >= maximal(values, 1.0).samples - 1e-12)


def test_maximal__dominates_global_average():
    rng = np.random.default_rng(16)
    values = rng.normal(size=32)
    w = power_weight(0.25, 32)
    global_average = np.sum(np.abs(values) * w.samples) / np.sum(w.samples)
    assert np.all(maximal(values, 1.0, "weighted", w).samples >= global_average - 1e-12)


def test_maximal__rejects():
    with pytest.raises(ExponentError):
        maximal(np.ones(8), 0.5)
    with pytest.raises(ConfigError):
        maximal(np.ones(8), 1.0, "weighted")
    with pytest.raises(ConfigError):
        maximal(np.ones(8), 1.0, "centered")


def test_dyadic_sharp__constant():
    assert np.allclose(dyadic_sharp(np.full(16, 5.0)).samples, 0)


def test_dyadic_sharp__left_half():
    f = np.zeros(8)
    f[:4] = 1
    assert np.allclose(dyadic_sharp(f).samples, 0.5)


def test_dyadic_sharp__below_twice_maximal():
    rng = np.random.default_rng(17)
    values = rng.normal(size=64)
    assert np.all(dyadic_sharp(values).samples <= 2 * maximal(values).samples + 1e-12)


def test_average():
    assert average(np.arange(8.0)) == pytest.approx(3.5)
