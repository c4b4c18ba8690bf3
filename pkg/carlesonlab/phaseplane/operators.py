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
"""The linearized model operator C_P, the bilinear form B_P and the variational model operator."""

import math
from typing import Optional

import numpy as np

from ..errors import ConfigError, SizingError
from ..fourier import Signal, check_variation_exponent
from ..weights import Weight
from .linearization import Linearization
from .packets import packet_coefficients, packet_matrix
from .tiles import TileCollection

STANDARD = "standard"
SYMMETRIC = "symmetric"


def _inside(values: np.ndarray, low: np.ndarray, high: np.ndarray) -> np.ndarray:
    return (low[:, np.newaxis] <= values[np.newaxis, :]) & (values[np.newaxis, :] <
                                                            high[:, np.newaxis])


def activation(collection: TileCollection, lin: Linearization,
               variant: str = STANDARD) -> np.ndarray:
    """d_P(x) for every bitile (rows) and grid point (columns).

    d_P(x) = d_j(x) for the unique j >= 1 with N_{j-1}(x) ∉ ω_P and N_j(x) ∈ ω_P2, and zero when
    there is none. The symmetric variant activates on N_{j-1}(x) ∈ ω_P1 and N_j(x) ∉ ω_P.
    """
    if variant not in (STANDARD, SYMMETRIC):
        raise ConfigError(f"unknown model operator variant {variant}")
    if lin.size != collection.n:
        raise SizingError(lin.size, collection.n)
    result = np.zeros((len(collection), collection.n), dtype=np.complex128)
    omega_low, omega_high = collection.omega
    for j in range(1, lin.thresholds.shape[1]):
        previous = lin.thresholds[:, j - 1]
        current = lin.thresholds[:, j]
        present = ~np.isnan(previous) & ~np.isnan(current)
        if variant == STANDARD:
            fires = (~_inside(previous, omega_low, omega_high) &
                     _inside(current, *collection.omega_upper))
        else:
            fires = (_inside(previous, *collection.omega_lower) &
                     ~_inside(current, omega_low, omega_high))
        fires &= present[np.newaxis, :]
        result = np.where(fires, lin.coefficients[np.newaxis, :, j], result)
    return result


def model_operator(collection: TileCollection,
                   f: Signal,
                   lin: Linearization,
                   variant: str = STANDARD) -> Signal:
    """C_P f(x) = Σ_P ⟨f, φ_P1⟩ φ_P1(x) d_P(x)."""
    if len(collection) == 0:
        return Signal(np.zeros(collection.n, dtype=np.complex128))
    coefficients = packet_coefficients(collection, f)
    packets = packet_matrix(collection)
    weights = activation(collection, lin, variant)
    return Signal(np.sum(coefficients[:, np.newaxis] * packets * weights, axis=0))


def bilinear_form(collection: TileCollection,
                  f: Signal,
                  g: Signal,
                  w: Weight,
                  lin: Linearization,
                  variant: str = STANDARD) -> complex:
    """B_P(f, g) = Σ_P ⟨f, φ_P1⟩ ⟨φ_P1 d_P, g w⟩, evaluated bitile by bitile."""
    if len(collection) == 0:
        return 0j
    coefficients = packet_coefficients(collection, f)
    localized = packet_matrix(collection) * activation(collection, lin, variant)
    pairings = localized @ (np.conj(g.samples) * w.samples) / collection.n
    return complex(np.sum(coefficients * pairings))


def threshold_representatives(collection: TileCollection) -> np.ndarray:
    """One threshold from every cell cut out by the endpoints of all ω_P and ω_P2."""
    endpoints = np.unique(
        np.concatenate([
            collection.omega[0], collection.omega[1], collection.omega_upper[0],
            collection.omega_upper[1], collection.omega_lower[0], collection.omega_lower[1]
        ]))
    if endpoints.shape[0] == 0:
        return endpoints
    return np.concatenate([[endpoints[0] - 1], endpoints])


def block_sums(collection: TileCollection, f: Signal, variant: str = STANDARD) -> np.ndarray:
    """A[s, t](x) = Σ of a_P φ_P1(x) over the bitiles activated by consecutive thresholds s < t."""
    representatives = threshold_representatives(collection)
    contributions = packet_coefficients(collection, f)[:, np.newaxis] * packet_matrix(collection)
    if variant == STANDARD:
        leaves = ~_inside(representatives, *collection.omega)
        enters = _inside(representatives, *collection.omega_upper)
    else:
        leaves = _inside(representatives, *collection.omega_lower)
        enters = ~_inside(representatives, *collection.omega)
    count = representatives.shape[0]
    blocks = np.zeros((count, count, collection.n), dtype=np.complex128)
    for s in range(count):
        for t in range(s + 1, count):
            fired = leaves[:, s] & enters[:, t]
            if np.any(fired):
                blocks[s, t] = contributions[fired].sum(axis=0)
    return blocks


def variational_model_operator(collection: TileCollection,
                               f: Signal,
                               r: float,
                               variant: str = STANDARD,
                               blocks: Optional[np.ndarray] = None) -> Signal:
    """C_{r,P} f(x) = sup over thresholds of (Σ_j |Σ_{P activated at j} ⟨f, φ_P1⟩ φ_P1(x)|^r)^{1/r}.

    Only the cell of each threshold matters, so the supremum is a longest-path problem over the
    cell representatives: best[t] = max(0, max_{s<t} best[s] + |A[s, t]|^r).
    """
    check_variation_exponent(r)
    if len(collection) == 0:
        return Signal(np.zeros(collection.n))
    if blocks is None:
        blocks = block_sums(collection, f, variant)
    count = blocks.shape[0]
    if math.isinf(r):
        return Signal(np.abs(blocks).max(axis=(0, 1)))
    best = np.zeros((count, collection.n))
    for t in range(1, count):
        best[t] = np.max(best[:t] + np.abs(blocks[:t, t])**r, axis=0)
    return Signal(best.max(axis=0)**(1 / r))
