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
"""Greedy decomposition of a collection into trees of large density."""

import logging
from typing import Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..errors import CertificateError
from ..fourier import Signal
from ..phaseplane import (
    STANDARD,
    DensityIntegrand,
    Linearization,
    TileCollection,
    Top,
    Tree,
    density_with_top,
    scan_tops,
)
from ..weights import Weight
from .result import CERTIFICATE_TOLERANCE, DENSITY, Certificate, DecompositionResult, SelectedTree
from .size import check_alpha

logger = logging.getLogger(__name__)


def top_mass_budget(g: Signal, w: Weight, lin: Linearization, alpha: float) -> float:
    """α^{-r'} ∫ |g|^{r'} w, which is α^{-r'} w(G) when |g| = 1_G."""
    check_alpha(alpha)
    integral = float(np.sum(np.abs(g.samples)**lin.r_dual * w.samples)) / w.size
    return integral / alpha**lin.r_dual


def _first_dense_top(integrand: DensityIntegrand, collection: TileCollection, w: Weight,
                     active: np.ndarray, threshold: float) -> Optional[Tuple[Top, float]]:
    """Nonempty tree top with w(I_T)^{-1} ∫ ... > threshold, largest |I_T| first.

    The scan visits intervals from the coarsest generation, left to right, with increasing ξ, so
    the first hit is the canonical choice.
    """
    for scan in scan_tops(collection, active):
        half = 0.5 / scan.interval.length
        values = integrand.integrals(scan.interval, (scan.xis - half, scan.xis + half))
        hits = np.flatnonzero(values > threshold * w.mass(scan.interval))
        if hits.shape[0]:
            row = int(hits[0])
            return Top(scan.interval, float(scan.xis[row])), float(values[row])
    return None


def density_decompose(collection: TileCollection,
                      g: Signal,
                      w: Weight,
                      lin: Linearization,
                      alpha: float,
                      progress: Optional[tqdm] = None) -> DecompositionResult:
    """Remove trees of density above α, together with their two neighbours in frequency.

    Each pass selects the tree with the longest top interval whose density exceeds α, enlarges it
    to the maximal tree with that top and also removes the maximal trees with tops
    ξ_T ± 1/(2|I_T|).

    Raises:
        ExponentError:    α <= 0.
        CertificateError: The remainder still has density above α.
    """
    check_alpha(alpha)
    integrand = DensityIntegrand(g, w, lin, collection.constants.decay_exponent(w))
    threshold = alpha**lin.r_dual
    active = np.ones(len(collection), dtype=bool)
    selected = []
    if progress is not None:
        progress.total = len(collection)

    while np.any(active):
        choice = _first_dense_top(integrand, collection, w, active, threshold)
        if choice is None:
            break
        top, value = choice
        tree = Tree.maximal(collection, top, active)
        active[tree.members] = False
        companions = []
        for steps in (1, -1):
            companion = Tree.maximal(collection, top.shifted(steps), active)
            active[companion.members] = False
            companions.append(companion)
        certificate = Certificate(DENSITY, w.mass(top.interval), value / threshold)
        logger.debug(f"Density selection {top}: integral {value!r} > α^r' w(I) = "
                     f"{threshold * certificate.mass!r}; {len(tree)} + "
                     f"{sum(len(c) for c in companions)} bitiles")
        selected.append(SelectedTree(tree, None, certificate, tuple(companions)))
        if progress is not None:
            progress.update(len(tree) + sum(len(c) for c in companions))

    result = DecompositionResult(collection, selected, active, alpha, DENSITY)
    remaining, top = density_with_top(collection, g, w, lin, STANDARD, active)
    if remaining > alpha * (1 + CERTIFICATE_TOLERANCE):
        raise CertificateError(f"remainder has density {remaining!r} > {alpha!r} at top {top}")
    logger.info(f"Density decomposition at α={alpha}: {len(selected)} selections, Σ w(I_T) = "
                f"{result.top_mass(w):.3e}, α^-r' ∫|g|^r' w = "
                f"{top_mass_budget(g, w, lin, alpha):.3e}")
    return result
