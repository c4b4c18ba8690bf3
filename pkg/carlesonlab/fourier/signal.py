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
"""Signals sampled on the cyclic grid and their discrete Fourier spectra.

The torus [0, 1) is sampled at the N points x_i = i/N with N a power of two. Integrals become
Riemann sums with step 1/N, so the Fourier coefficient of frequency k is

    F(k) = (1/N) Σ_i f(x_i) e^{-2πi k x_i},    k = -N/2, ..., N/2 - 1,

and the inversion formula is f(x_i) = Σ_k F(k) e^{2πi k x_i}.
"""

from typing import Callable, Union

import numpy as np

from ..errors import FrequencyRangeError, SizingError

ArrayLike = Union["Signal", np.ndarray]


def check_grid_size(n: int) -> int:
    """Verify that `n` is a supported grid length.

    Raises:
        SizingError: `n` is not a power of two, or is smaller than 8.
    """
    if n < 8 or n & (n - 1) != 0:
        raise SizingError(n)
    return n


def _frozen(values: np.ndarray) -> np.ndarray:
    if np.iscomplexobj(values):
        array = np.array(values, dtype=np.complex128)
    else:
        array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


class Signal:
    """Function on the cyclic grid.

    Real valued results of the pointwise operators are stored as real arrays, everything else as
    complex arrays. The samples are read-only.

    Attributes:
        samples: Values f(x_i), i = 0, ..., N - 1.
    """
    samples: np.ndarray

    def __init__(self, samples):
        samples = np.asarray(samples)
        if samples.ndim != 1:
            raise SizingError(samples.size)
        check_grid_size(samples.shape[0])
        self.samples = _frozen(samples)

    @classmethod
    def zeros(cls, n: int) -> "Signal":
        return cls(np.zeros(check_grid_size(n)))

    @classmethod
    def from_function(cls, fn: Callable[[np.ndarray], np.ndarray], n: int) -> "Signal":
        """Sample a vectorized function at the grid points of a grid of length `n`."""
        return cls(fn(grid_points(check_grid_size(n))))

    @classmethod
    def tone(cls, frequency: int, n: int) -> "Signal":
        """The pure tone e^{2πi k x}."""
        check_frequency(frequency, n)
        return cls(np.exp(2j * np.pi * frequency * grid_points(check_grid_size(n))))

    @property
    def size(self) -> int:
        return self.samples.shape[0]

    @property
    def grid(self) -> np.ndarray:
        return grid_points(self.size)

    def inner(self, other: "Signal") -> complex:
        """Riemann-sum inner product (1/N) Σ f(x_i) conj(g(x_i))."""
        check_same_size(self, other)
        return complex(np.vdot(other.samples, self.samples) / self.size)

    def norm(self) -> float:
        return float(np.sqrt(np.mean(np.abs(self.samples)**2)))

    def is_zero(self) -> bool:
        return not np.any(self.samples)

    def __len__(self) -> int:
        return self.size

    def __add__(self, other: "Signal") -> "Signal":
        check_same_size(self, other)
        return Signal(self.samples + other.samples)

    def __sub__(self, other: "Signal") -> "Signal":
        check_same_size(self, other)
        return Signal(self.samples - other.samples)

    def __mul__(self, other) -> "Signal":
        if isinstance(other, Signal):
            check_same_size(self, other)
            return Signal(self.samples * other.samples)
        return Signal(self.samples * other)

    __rmul__ = __mul__

    def __neg__(self) -> "Signal":
        return Signal(-self.samples)

    def __abs__(self) -> "Signal":
        return Signal(np.abs(self.samples))

    def __repr__(self) -> str:
        return f"Signal(size={self.size}, dtype={self.samples.dtype})"


class Spectrum:
    """Fourier coefficients F(k) for k = -N/2, ..., N/2 - 1.

    Coefficients are stored in FFT order: position k mod N holds F(k).

    Attributes:
        coefficients: Read-only coefficient array in FFT order.
    """
    coefficients: np.ndarray

    def __init__(self, coefficients):
        coefficients = np.asarray(coefficients, dtype=np.complex128)
        check_grid_size(coefficients.shape[0])
        self.coefficients = _frozen(coefficients)

    @property
    def size(self) -> int:
        return self.coefficients.shape[0]

    @property
    def frequencies(self) -> np.ndarray:
        """Integer frequency of every stored coefficient, in storage order."""
        return frequencies(self.size)

    def __getitem__(self, frequency: int) -> complex:
        check_frequency(frequency, self.size)
        return complex(self.coefficients[frequency % self.size])

    def restrict(self, mask: np.ndarray) -> "Spectrum":
        """Keep the coefficients where `mask` (in storage order) holds, zero the others."""
        return Spectrum(np.where(mask, self.coefficients, 0))

    def multiply(self, symbol: np.ndarray) -> "Spectrum":
        """Apply a Fourier multiplier given in storage order."""
        return Spectrum(self.coefficients * symbol)

    def energy(self) -> float:
        return float(np.sum(np.abs(self.coefficients)**2))

    def __repr__(self) -> str:
        return f"Spectrum(size={self.size})"


def grid_points(n: int) -> np.ndarray:
    return np.arange(n) / n


def frequencies(n: int) -> np.ndarray:
    return np.fft.fftfreq(n, d=1.0 / n).astype(np.int64)


def check_frequency(frequency: float, n: int) -> None:
    if not -n // 2 <= frequency < n // 2:
        raise FrequencyRangeError(frequency, n // 2)


def check_same_size(first: Signal, second: Signal) -> None:
    if first.size != second.size:
        raise SizingError(second.size, first.size)


def samples_of(f: ArrayLike) -> np.ndarray:
    """Samples of a signal, or the array itself after checking its length."""
    if isinstance(f, Signal):
        return f.samples
    array = np.asarray(f)
    check_grid_size(array.shape[0])
    return array


def dft(f: Signal) -> Spectrum:
    """Discrete Fourier transform with the Riemann-sum normalization."""
    return Spectrum(np.fft.fft(f.samples) / f.size)


def idft(spectrum: Spectrum) -> Signal:
    """Inverse of `dft`."""
    return Signal(np.fft.ifft(spectrum.coefficients) * spectrum.size)
