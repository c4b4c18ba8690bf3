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
"""Tests for wave packets and sampled packet families."""

import numpy as np
import pytest

from carlesonlab.errors import FrequencyRangeError
from carlesonlab.fourier import Signal, dft
from carlesonlab.phaseplane import (
    Tile,
    bump,
    packet_coefficients,
    packet_matrix,
    packet_spectrum,
    partition_bump,
    sampling_reconstruction,
    smooth_step,
    wave_packet,
)
from carlesonlab.phaseplane.packets import packet_grid_check


def test_bump__profile():
    assert bump(0.0) == pytest.approx(1)
    assert bump(0.5) == 0
    assert bump(-0.7) == 0
    values = bump(np.linspace(-0.49, 0.49, 11))
    assert np.all(values >= 0)
    assert np.allclose(values, values[::-1])


def test_smooth_step():
    assert smooth_step(-1.0, 0.25) == 0
    assert smooth_step(1.0, 0.25) == 1
    assert smooth_step(0.0, 0.25) == pytest.approx(0.5)
    steps = smooth_step(np.linspace(-0.3, 0.3, 13), 0.25)
    assert np.all(np.diff(steps) >= 0)


@pytest.mark.parametrize("tile", [Tile(2, 0, 0), Tile(2, 1, -5), Tile(8, 3, 2), Tile(64, 17, -1)])
def test_wave_packet__unit_norm_and_support(constants, tile):
    packet = wave_packet(tile, constants, 256)
    assert packet.norm() == pytest.approx(1)
    assert packet_grid_check(tile, constants, 256) == 0


def test_wave_packet__localized_in_space(constants):
    packet = wave_packet(Tile(64, 10, 0), constants, 256).samples
    center = int(round((10 + 0.5) / 64 * 256))
    assert np.argmax(np.abs(packet)) in range(center - 2, center + 3)


def test_packet_spectrum__out_of_band(constants):
    with pytest.raises(FrequencyRangeError):
        packet_spectrum(Tile(8, 0, 2), constants, 32)


def test_packet_coefficients__match_inner_products(collection, signal_factory):
    f = signal_factory(64)
    packets = packet_matrix(collection)
    expected = [f.inner(Signal(row)) for row in packets]
    assert np.allclose(packet_coefficients(collection, f), expected)


def test_packet_coefficients__upper_tiles(collection):
    f = wave_packet(collection[0].upper, collection.constants, 64)
    assert packet_coefficients(collection, f, upper=True)[0] == pytest.approx(1)


@pytest.mark.parametrize("interval", [(8.0, 24.0), (-32.0, -16.0), (0.0, 4.0)])
def test_sampling_reconstruction(interval, signal_factory):
    for seed in range(20):
        f = signal_factory(256, seed)
        expected = dft(f).coefficients * partition_bump(interval, 256)
        result = sampling_reconstruction(f, interval)
        assert np.linalg.norm(result - expected) <= 1e-8 * max(1.0, np.linalg.norm(expected))


def test_sampling_reconstruction__too_wide(signal_factory):
    with pytest.raises(FrequencyRangeError):
        sampling_reconstruction(signal_factory(16), (0.0, 16.0))
