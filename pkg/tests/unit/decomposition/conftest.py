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
"""Fixtures for the decomposition tests."""

import pytest

from carlesonlab.decomposition import density_decompose, size_decompose
from carlesonlab.phaseplane import Top, Tree, build_bitile_collection, density, size
from carlesonlab.weights import DyadicGrid, DyadicInterval, Weight


@pytest.fixture
def lebesgue():
    return Weight.lebesgue(256)


@pytest.fixture
def size_result(two_scale_collection, signal_factory, lebesgue):
    f = signal_factory(256)
    alpha = 0.5 * size(two_scale_collection, f, lebesgue)
    return size_decompose(two_scale_collection, f, lebesgue, alpha), f


@pytest.fixture
def density_result(two_scale_collection, signal_factory, linearization_factory, lebesgue):
    g = signal_factory(256, seed=1)
    lin = linearization_factory(256)
    alpha = 0.5 * density(two_scale_collection, g, lebesgue, lin)
    return density_decompose(two_scale_collection, g, lebesgue, lin, alpha), g, lin


@pytest.fixture
def lattice(constants):
    """The full two-scale lattice at N = 256."""
    return build_bitile_collection(DyadicGrid(256), constants, scales=2)


@pytest.fixture
def coarse_tree(lattice):
    """The 2-overlapping tree over [0, 1/2) at ξ = 65: the 64 coarse-frequency bitiles under it."""
    return Tree.maximal(lattice, Top(DyadicInterval(1, 0), 65.0)).split()[0]
