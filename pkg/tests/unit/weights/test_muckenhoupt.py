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
"""Tests for A_p constants, doubling and A_∞ exponents."""

import itertools
import math

import numpy as np
import pytest

from carlesonlab.errors import ExponentError
from carlesonlab.weights import (
    Weight,
    a_infinity_exponent,
    ap_constant,
    ap_constant_exhaustive,
    doubling_exponent,
    power_weight,
)


@pytest.mark.parametrize("p", [1.5, 2.0, 4.0])
def test_ap_constant__constant_weight(p):
    assert ap_constant(Weight(np.full(64, 3.0)), p) == pytest.approx(1, abs=1e-9)
    assert ap_constant_exhaustive(Weight(np.full(16, 0.2)), p) == pytest.approx(1, abs=1e-9)


@pytest.mark.parametrize("p", [1.0, 0.5])
def test_ap_constant__rejects_p(p):
    with pytest.raises(ExponentError):
        ap_constant(Weight.lebesgue(8), p)
    with pytest.raises(ExponentError):
        ap_constant_exhaustive(Weight.lebesgue(8), p)


def test_ap_constant__at_least_one():
    rng = np.random.default_rng(11)
    w = Weight(rng.uniform(0.1, 10, size=32))
    assert ap_constant(w, 2) >= 1


def test_ap_constant__nonincreasing_in_p():
    for a in (0.25, 0.5, 0.75):
        w = power_weight(a, 128)
        assert ap_constant(w, 4) <= ap_constant(w, 2) + 1e-12


def test_ap_constant__grows_with_exponent():
    values = [ap_constant(power_weight(a, 256), 2) for a in (0.0, 0.25, 0.5, 0.75)]
    assert values == sorted(values)
    assert values[0] == pytest.approx(1)


@pytest.mark.parametrize("a", [0.25, 0.5, 0.75])
def test_ap_constant__within_two_of_exhaustive(a):
    w = power_weight(a, 256)
    estimate = ap_constant(w, 2)
    exhaustive = ap_constant_exhaustive(w, 2)
    assert estimate <= exhaustive + 1e-12
    assert exhaustive <= 2 * estimate


def test_ap_constant__is_scale_invariant():
    w = power_weight(0.5, 64)
    assert ap_constant(w.scaled(5.0), 3) == pytest.approx(ap_constant(w, 3))


def test_doubling_exponent__lebesgue():
    assert doubling_exponent(Weight.lebesgue(64)) == pytest.approx(1, abs=1e-3)


def test_doubling_exponent__scale_invariant():
    w = power_weight(0.5, 64)
    assert doubling_exponent(w.scaled(2.0)) == pytest.approx(doubling_exponent(w))


def test_doubling_exponent__bounds_every_dilation():
    w = power_weight(0.5, 64)
    gamma = doubling_exponent(w)
    depth = 6
    for level in range(1, depth + 1):
        for index in range(1 << level):
            center = (index + 0.5) / (1 << level)
            base = w.measure(center - 2.0**(-level - 1), center + 2.0**(-level - 1))
            for k in range(1, level + 1):
                half = 2.0**(k - level - 1)
                assert w.measure(center - half, center + half) <= 2**(gamma * k) * base * (1 + 1e-9)


def test_doubling_exponent__power_weight_exceeds_lebesgue():
    assert doubling_exponent(power_weight(0.5, 256)) > 1


def test_a_infinity_exponent__lebesgue():
    assert a_infinity_exponent(Weight.lebesgue(32)) == pytest.approx(1)


def test_a_infinity_exponent__power_weight():
    beta = a_infinity_exponent(power_weight(0.5, 64))
    assert 0 < beta < 1


def test_a_infinity_exponent__matches_enumeration_of_subsets(rng):
    w = Weight(rng.uniform(0.1, 3.0, size=8))
    expected = 1.0
    for level in range(3):
        count = 8 >> level
        for index in range(1 << level):
            cells = w.samples[index * count:(index + 1) * count]
            for size in range(1, count):
                for chosen in itertools.combinations(range(count), size):
                    ratio = cells[list(chosen)].sum() / cells.sum()
                    expected = min(expected, math.log(ratio) / math.log(size / count))
    assert a_infinity_exponent(w) == pytest.approx(expected)


def test_a_infinity_exponent__bounds_every_subset(rng):
    w = power_weight(0.5, 16)
    beta = a_infinity_exponent(w)
    for _ in range(200):
        mask = rng.random(16) < 0.5
        if 0 < mask.sum() < 16:
            assert w.mass_of(mask) / w.total <= (mask.sum() / 16)**beta * (1 + 1e-12)
