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
"""Greedy decomposition of a collection into trees of large size."""

import logging
import math
from typing import Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..errors import CertificateError, ExponentError
from ..fourier import Signal
from ..phaseplane import TileCollection, Top, Tree, bitile_energies, scan_tops, size_with_top
from ..weights import Weight
from .result import SIZE, Certificate, DecompositionResult, SelectedTree

logger = logging.getLogger(__name__)


def check_alpha(alpha: float) -> None:
    if math.isnan(alpha) or alpha <= 0:
        raise ExponentError("alpha", alpha, "alpha > 0")


def _first_large_top(collection: TileCollection, energies: np.ndarray, w: Weight,
                     active: np.ndarray,
                     threshold: float) -> Optional[Tuple[Top, np.ndarray, float]]:
    """Top with minimal ξ among those whose 2-overlapping tree has ‖S_T2 f‖² >= threshold · w(I).

    Ties go to the leftmost interval, then to the lowest ω_T.
    """
    best = None
    best_key = None
    for scan in scan_tops(collection, active):
        values = scan.overlapping.astype(float) @ energies[scan.candidates]
        qualifying = np.flatnonzero((values >= threshold * w.mass(scan.interval)) & (values > 0))
        if qualifying.shape[0] == 0:
            continue
        # ξ increases within a scan, so the first qualifying row is its best candidate.
        row = int(qualifying[0])
        top = Top(scan.interval, float(scan.xis[row]))
        key = top.sort_key()
        if best_key is None or key < best_key:
            best_key = key
            best = top, scan.candidates[scan.overlapping[row]], float(values[row])
    return best


def size_decompose(collection: TileCollection,
                   f: Signal,
                   w: Weight,
                   alpha: float,
                   progress: Optional[tqdm] = None) -> DecompositionResult:
    """Remove maximal trees until the remaining collection has size below α.

    Every pass picks a nonempty 2-overlapping tree T2 with ‖S_T2 f‖²_{L²(w)} >= α² w(I_T2) and the
    smallest top frequency, then removes the maximal tree with the same top.

    Raises:
        ExponentError:    α <= 0.
        CertificateError: The remainder still has size α or more.
    """
    check_alpha(alpha)
    energies = bitile_energies(collection, f, w)
    active = np.ones(len(collection), dtype=bool)
    threshold = alpha**2
    selected = []
    if progress is not None:
        progress.total = len(collection)

    while np.any(active):
        choice = _first_large_top(collection, energies, w, active, threshold)
        if choice is None:
            break
        top, witness_members, value = choice
        tree = Tree.maximal(collection, top, active)
        witness = Tree(collection, witness_members, top)
        mass = w.mass(top.interval)
        certificate = Certificate(SIZE, mass, value / threshold)
        logger.debug(f"Size selection {top}: ‖S_T2 f‖² = {value!r} >= α² w(I) = "
                     f"{threshold * mass!r}; unsquared form ‖S_T2 f‖ >= α² w(I) "
                     f"{'holds' if math.sqrt(value) >= threshold * mass else 'fails'}")
        active[tree.members] = False
        selected.append(SelectedTree(tree, witness, certificate))
        if progress is not None:
            progress.update(len(tree))

    result = DecompositionResult(collection, selected, active, alpha, SIZE)
    remaining, top = size_with_top(collection, f, w, active)
    if remaining >= alpha:
        raise CertificateError(f"remainder has size {remaining!r} >= {alpha!r} at top {top}")
    logger.info(f"Size decomposition at α={alpha}: {len(selected)} trees, "
                f"{int(active.sum())} bitiles left with size {remaining:.3e}")
    return result
