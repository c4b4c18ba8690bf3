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
"""Seeded test signal families and weights."""

import logging
import math
from typing import Any, Callable, Dict, List, Mapping

import numpy as np

from ..errors import ConfigError
from ..fourier import Signal, frequencies, grid_points, idft
from ..fourier.signal import Spectrum
from ..phaseplane import bump
from ..weights import Weight, power_weight

logger = logging.getLogger(__name__)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial, whatever order the trials run in."""
    return np.random.default_rng([seed, trial])


def _degree(spec: Mapping[str, Any], n: int) -> int:
    return max(1, min(int(spec.get("degree", 16)), n // 2 - 1))


def random_polynomial(spec: Mapping[str, Any], n: int, rng: np.random.Generator) -> Signal:
    """Complex Gaussian coefficients on |k| <= degree."""
    degree = _degree(spec, n)
    ks = frequencies(n)
    inside = np.abs(ks) <= degree
    coefficients = np.where(inside, rng.normal(size=n) + 1j * rng.normal(size=n), 0)
    return idft(Spectrum(coefficients))


def dirichlet(spec: Mapping[str, Any], n: int, rng: np.random.Generator) -> Signal:
    """Modulated partial Dirichlet kernel e^{2πi k0 x} D_m(x - x0) with random m, k0, x0."""
    degree = _degree(spec, n)
    m = int(rng.integers(1, degree + 1))
    shift = int(rng.integers(-(n // 2 - 1 - m), n // 2 - m))
    center = int(rng.integers(0, n)) / n
    ks = frequencies(n)
    coefficients = np.where(np.abs(ks - shift) <= m, np.exp(-2j * np.pi * ks * center), 0)
    return idft(Spectrum(coefficients))


def lacunary(spec: Mapping[str, Any], n: int, rng: np.random.Generator) -> Signal:
    """Σ_j ε_j e^{2πi 2^j x} with random signs ε_j = ±1 over all resolvable 2^j."""
    x = grid_points(n)
    count = int(math.log2(n // 2))
    signs = rng.choice([-1.0, 1.0], size=count)
    return Signal(sum(sign * np.exp(2j * np.pi * 2**j * x) for j, sign in enumerate(signs)))


def smoothed_indicator(spec: Mapping[str, Any], n: int, rng: np.random.Generator) -> Signal:
    """Indicator of a random grid interval with its spectrum tapered by a bump of width 2·degree."""
    degree = _degree(spec, n)
    length = int(rng.integers(1, n))
    start = int(rng.integers(0, n))
    samples = np.zeros(n)
    samples[(start + np.arange(length)) % n] = 1.0
    spectrum = np.fft.fft(samples) / n * bump(frequencies(n) / (2 * degree + 2))
    return Signal(np.real(np.fft.ifft(spectrum) * n))


def tone(spec: Mapping[str, Any], n: int, rng: np.random.Generator) -> Signal:
    """A single frequency, fixed by `frequency` or drawn uniformly."""
    if "frequency" in spec:
        frequency = int(spec["frequency"])
    else:
        frequency = int(rng.integers(-(n // 2), n // 2))
    return Signal.tone(frequency, n)


GENERATORS: Dict[str, Callable[[Mapping[str, Any], int, np.random.Generator], Signal]] = {
    "random": random_polynomial,
    "dirichlet": dirichlet,
    "lacunary": lacunary,
    "smoothed_indicator": smoothed_indicator,
    "tone": tone,
}


def make_signal(spec: Mapping[str, Any], n: int, rng: np.random.Generator) -> Signal:
    try:
        generator = GENERATORS[spec["kind"]]
    except KeyError as error:
        raise ConfigError(f"unknown signal family {spec.get('kind')}") from error
    return generator(spec, n, rng)


def make_family(spec: Mapping[str, Any], n: int, trials: int, seed: int) -> List[Signal]:
    return [make_signal(spec, n, trial_rng(seed, trial)) for trial in range(trials)]


def make_weight(spec: Mapping[str, Any], n: int) -> Weight:
    kind = spec.get("kind", "lebesgue")
    if kind == "lebesgue":
        return Weight.lebesgue(n)
    if kind == "power":
        return power_weight(float(spec.get("a", 0.0)), n)
    if kind == "csv":
        return _csv_weight(spec["path"], n)
    raise ConfigError(f"unknown weight {kind}")


def _csv_weight(path: str, n: int) -> Weight:
    try:
        w = Weight.from_csv(path)
    except OSError as error:
        raise ConfigError(f"cannot read weight file {path}: {error}") from error
    if w.size != n:
        raise ConfigError(f"weight file {path} has {w.size} samples, the grid needs {n}")
    return w
