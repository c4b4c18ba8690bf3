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
"""Fixtures for testing carlesonlab."""

import json
from pathlib import Path

import numpy as np
import pytest

from carlesonlab.fourier import Signal
from carlesonlab.phaseplane import AdmissibleConstants, Linearization, build_bitile_collection
from carlesonlab.weights import DyadicGrid, Weight, power_weight

_pinned_dir = Path(__file__).parent / "data" / "pinned"


def pytest_addoption(parser):
    parser.addoption(
        "--update-expected-results",
        action="store_true",
        help="Update the pinned regression values with the current results.")


@pytest.fixture
def update_expected_results(request):
    return request.config.getoption("update_expected_results")


@pytest.fixture
def pinned(update_expected_results):
    """Compare values with the ones stored by the first run; a missing file is written first."""
    def check(name, values, rtol=1e-9):
        pinned_file = _pinned_dir / f"{name}.json"
        if update_expected_results or not pinned_file.is_file():
            pinned_file.parent.mkdir(parents=True, exist_ok=True)
            pinned_file.write_text(json.dumps(values, indent=2), encoding="UTF-8")
        expected = json.loads(pinned_file.read_text(encoding="UTF-8"))
        np.testing.assert_allclose(np.asarray(values, dtype=float),
                                   np.asarray(expected, dtype=float),
                                   rtol=rtol)

    return check


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def constants():
    return AdmissibleConstants()


@pytest.fixture
def collection(constants):
    """All bitiles of the finest scale at N = 64."""
    return build_bitile_collection(DyadicGrid(64), constants)


@pytest.fixture
def two_scale_collection(constants):
    """A seeded subset of the two-scale lattice at N = 256."""
    full = build_bitile_collection(DyadicGrid(256), constants, scales=2)
    return full.random_subset(80, np.random.default_rng(5))


@pytest.fixture(params=[0.0, 0.5], ids=["lebesgue", "power"])
def weight_exponent(request):
    return request.param


@pytest.fixture
def weight_factory(weight_exponent):
    def factory(n):
        return power_weight(weight_exponent, n) if weight_exponent else Weight.lebesgue(n)

    return factory


@pytest.fixture
def signal_factory():
    def factory(n, seed=0):
        generator = np.random.default_rng(seed)
        return Signal(generator.normal(size=n) + 1j * generator.normal(size=n))

    return factory


@pytest.fixture
def linearization_factory():
    def factory(n, r=4.0, seed=0):
        return Linearization.random(n, r, np.random.default_rng(seed))

    return factory
