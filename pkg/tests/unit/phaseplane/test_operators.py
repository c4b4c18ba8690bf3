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
"""Tests for the linearized and variational model operators."""

import itertools
import math

import numpy as np
import pytest

from carlesonlab.errors import ConfigError
from carlesonlab.fourier import Signal
from carlesonlab.phaseplane import (
    STANDARD,
    SYMMETRIC,
    Bitile,
    Linearization,
    TileCollection,
    activation,
    bilinear_form,
    build_bitile_collection,
    model_operator,
    packet_coefficients,
    variational_model_operator,
    wave_packet,
)
from carlesonlab.weights import DyadicGrid, Weight, power_weight, weighted_lp_norm


@pytest.fixture
def single(constants):
    return TileCollection(256, constants, [Bitile(2, 0, 0, constants)])


@pytest.fixture
def sparse_collection(collection):
    return collection.subset(range(0, len(collection), 5))


def test_activation__fires_on_entering_upper_tile(single):
    lin = Linearization.constant(256, [-0.5, 2.5], [1.0], 2.0)
    assert np.all(activation(single, lin) == 1)


def test_activation__silent_when_previous_threshold_inside(single):
    lin = Linearization.constant(256, [0.5, 2.5], [1.0], 2.0)
    assert np.all(activation(single, lin) == 0)


def test_activation__symmetric_variant(single):
    lin = Linearization.constant(256, [0.5, 4.5], [1.0], 2.0)
    assert np.all(activation(single, lin, SYMMETRIC) == 1)
    assert np.all(activation(single, lin) == 0)


def test_activation__unknown_variant(single):
    with pytest.raises(ConfigError):
        activation(single, Linearization.empty(256, 2.0), "other")


def test_model_operator__empty_collection(constants, signal_factory):
    empty = TileCollection(64, constants, [])
    result = model_operator(empty, signal_factory(64), Linearization.empty(64, 2.0))
    assert np.all(result.samples == 0)


def test_model_operator__empty_linearization(sparse_collection, signal_factory):
    result = model_operator(sparse_collection, signal_factory(64), Linearization.empty(64, 2.0))
    assert np.allclose(result.samples, 0)


def test_bilinear_form__pairs_model_operator(sparse_collection, signal_factory,
                                             linearization_factory, weight_factory):
    f = signal_factory(64)
    g = signal_factory(64, seed=1)
    w = weight_factory(64)
    lin = linearization_factory(64)
    expected = np.mean(model_operator(sparse_collection, f, lin).samples * np.conj(g.samples) *
                       w.samples)
    assert bilinear_form(sparse_collection, f, g, w, lin) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("r", [2.0, 4.0])
def test_variational_model_operator__dominates_linearizations(sparse_collection, signal_factory,
                                                              r):
    f = signal_factory(64)
    variational = variational_model_operator(sparse_collection, f, r).samples
    for seed in range(3):
        lin = Linearization.random(64, r, np.random.default_rng(seed))
        linear = np.abs(model_operator(sparse_collection, f, lin).samples)
        assert np.all(linear <= variational + 1e-9)


def test_variational_model_operator__monotone_in_r(sparse_collection, signal_factory):
    f = signal_factory(64)
    assert np.all(
        variational_model_operator(sparse_collection, f, 4.0).samples <=
        variational_model_operator(sparse_collection, f, 2.0).samples + 1e-9)


def test_variational_model_operator__zero_function(sparse_collection):
    result = variational_model_operator(sparse_collection, Signal.zeros(64), 3.0)
    assert weighted_lp_norm(result, 2) == 0


def _inside(value, interval):
    return interval[0] <= value < interval[1]


def _fires(bitile, previous, current, variant):
    if variant == STANDARD:
        return not _inside(previous, bitile.omega) and _inside(current, bitile.upper.omega)
    return _inside(previous, bitile.lower.omega) and not _inside(current, bitile.omega)


def variation_over_threshold_sequences(collection, f, r, variant):
    """Supremum over every increasing sequence drawn from one threshold per frequency cell."""
    endpoints = sorted({
        end
        for bitile in collection
        for interval in (bitile.omega, bitile.lower.omega, bitile.upper.omega)
        for end in interval
    })
    candidates = ([endpoints[0] - 1] + [(a + b) / 2 for a, b in zip(endpoints, endpoints[1:])] +
                  [endpoints[-1] + 1])
    coefficients = packet_coefficients(collection, f)
    terms = [
        coefficient * wave_packet(bitile.lower, collection.constants, collection.n).samples
        for coefficient, bitile in zip(coefficients, collection)
    ]
    best = np.zeros(collection.n)
    for length in range(2, len(candidates) + 1):
        for sequence in itertools.combinations(candidates, length):
            total = np.zeros(collection.n)
            for previous, current in zip(sequence, sequence[1:]):
                block = sum((term for term, bitile in zip(terms, collection)
                             if _fires(bitile, previous, current, variant)),
                            np.zeros(collection.n, dtype=np.complex128))
                if math.isinf(r):
                    total = np.maximum(total, np.abs(block))
                else:
                    total = total + np.abs(block)**r
            best = np.maximum(best, total if math.isinf(r) else total**(1 / r))
    return best


@pytest.mark.parametrize("variant", [STANDARD, SYMMETRIC])
@pytest.mark.parametrize("r", [1.5, 2.0, 3.0, math.inf])
def test_variational_model_operator__matches_enumeration_of_threshold_sequences(
        constants, signal_factory, variant, r):
    collection = TileCollection(256, constants, [
        Bitile(2, 0, 0, constants),
        Bitile(2, 1, 2, constants),
        Bitile(128, 0, -1, constants),
        Bitile(128, 70, -1, constants),
    ])
    f = signal_factory(256)
    expected = variation_over_threshold_sequences(collection, f, r, variant)
    result = variational_model_operator(collection, f, r, variant).samples
    np.testing.assert_allclose(result, expected, atol=1e-10)


@pytest.mark.slow
def test_bilinear_form__pairs_model_operator_on_seeded_instances(constants):
    lattice = build_bitile_collection(DyadicGrid(256), constants, scales=2)
    for seed in range(100):
        rng = np.random.default_rng(seed)
        collection = lattice.random_subset(int(rng.integers(1, 201)), rng)
        f = Signal(rng.normal(size=256) + 1j * rng.normal(size=256))
        g = Signal(rng.normal(size=256) + 1j * rng.normal(size=256))
        w = power_weight(float(rng.choice([0.25, 0.5])), 256) if seed % 2 else Weight.lebesgue(256)
        lin = Linearization.random(256, float(rng.choice([1.5, 2.0, 4.0])), rng)
        variant = SYMMETRIC if seed % 3 == 0 else STANDARD
        expected = np.mean(model_operator(collection, f, lin, variant).samples *
                           np.conj(g.samples) * w.samples)
        assert bilinear_form(collection, f, g, w, lin, variant) == pytest.approx(expected,
                                                                                  abs=1e-10)
