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
"""Outcome of a greedy decomposition: selected trees, their certificates and the remainder."""

import logging
import math
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from ..errors import CertificateError, SizingError
from ..fourier import Signal
from ..phaseplane import DensityIntegrand, Linearization, TileCollection, Top, Tree, bitile_energies
from ..weights import Weight

logger = logging.getLogger(__name__)

SIZE = "size"
DENSITY = "density"

CERTIFICATE_TOLERANCE = 1e-9


class Certificate(NamedTuple):
    """The inequality that triggered a selection: w(I_T) <= bound.

    For a size selection the bound is α^{-2} ‖S_{T2} f‖²_{L²(w)}, for a density selection it is
    α^{-r'} ∫ χ̃^D_{I_T} |g|^{r'} Σ_{N_j ∈ ω_T} |d_j|^{r'} w.
    """
    kind: str
    mass: float
    bound: float

    def holds(self) -> bool:
        return self.mass <= self.bound * (1 + CERTIFICATE_TOLERANCE)


class SelectedTree(NamedTuple):
    """One selection step.

    Attributes:
        tree:        Maximal tree removed for the selected top.
        witness:     The 2-overlapping tree T2 whose size triggered a size selection.
        certificate: Stored selection inequality.
        companions:  Trees with tops shifted by ±1/(2|I_T|), removed together with a density
                         selection.
    """
    tree: Tree
    witness: Optional[Tree]
    certificate: Certificate
    companions: Tuple[Tree, ...] = ()

    @property
    def top(self) -> Top:
        return self.tree.top

    def members(self) -> np.ndarray:
        parts = [self.tree.members] + [companion.members for companion in self.companions]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def trees(self) -> List[Tree]:
        """The selected tree and its nonempty companions."""
        return [self.tree] + [companion for companion in self.companions if len(companion)]


class DecompositionResult:
    """Trees selected by one decomposition run and the bitiles left over.

    Attributes:
        collection: Input collection; member indices refer to it.
        selected:   Selections in the order they were made.
        remainder:  Boolean mask of the bitiles no tree took.
        alpha:      Selection threshold.
        kind:       SIZE or DENSITY.
    """
    collection: TileCollection
    selected: List[SelectedTree]
    remainder: np.ndarray
    alpha: float
    kind: str

    def __init__(self, collection: TileCollection, selected: List[SelectedTree],
                 remainder: np.ndarray, alpha: float, kind: str):
        self.collection = collection
        self.selected = selected
        self.remainder = np.asarray(remainder, dtype=bool)
        self.alpha = alpha
        self.kind = kind

    @property
    def trees(self) -> List[Tree]:
        return [tree for selection in self.selected for tree in selection.trees()]

    @property
    def witnesses(self) -> List[Tree]:
        return [selection.witness for selection in self.selected if selection.witness is not None]

    def remainder_collection(self) -> TileCollection:
        return self.collection.subset(np.flatnonzero(self.remainder))

    def selected_mask(self) -> np.ndarray:
        return ~self.remainder

    def top_mass(self, w: Weight) -> float:
        """Σ_T w(I_T) over all removed trees."""
        return float(sum(w.mass(tree.top.interval) for tree in self.trees))

    def verify(self) -> None:
        """Check the partition and every stored certificate.

        Raises:
            CertificateError: Trees overlap, a bitile is lost, or a certificate fails.
        """
        count = np.zeros(len(self.collection), dtype=np.int64)
        for selection in self.selected:
            np.add.at(count, selection.members(), 1)
            if not selection.certificate.holds():
                raise CertificateError(f"certificate of top {selection.top} fails: "
                                       f"{selection.certificate.mass!r} > "
                                       f"{selection.certificate.bound!r}")
        count += self.remainder
        if np.any(count != 1):
            raise CertificateError(f"bitiles {np.flatnonzero(count != 1).tolist()} are not covered "
                                   "exactly once")

    def recheck(self,
                w: Weight,
                f: Optional[Signal] = None,
                g: Optional[Signal] = None,
                lin: Optional[Linearization] = None) -> None:
        """Recompute every certificate from the signals and compare with the stored values.

        Size results need `f`, density results need `g` and `lin`.

        Raises:
            CertificateError: A recomputed value differs from the stored one or fails.
        """
        self.verify()
        if w.size != self.collection.n:
            raise SizingError(w.size, self.collection.n)
        if self.kind == SIZE:
            if f is None:
                raise CertificateError("size certificates need the signal f")
            energies = bitile_energies(self.collection, f, w)
            exponent = 2.0
        else:
            if g is None or lin is None:
                raise CertificateError("density certificates need g and the linearization")
            integrand = DensityIntegrand(g, w, lin, self.collection.constants.decay_exponent(w))
            exponent = lin.r_dual

        for selection in self.selected:
            top = selection.top
            if self.kind == SIZE:
                witness = selection.witness
                value = float(np.sum(energies[witness.members])) if witness is not None else 0.0
            else:
                value = integrand.integral(top.interval, top.omega)
            recomputed = Certificate(self.kind, w.mass(top.interval), value / self.alpha**exponent)
            if not (math.isclose(recomputed.mass, selection.certificate.mass, rel_tol=1e-9)
                    and math.isclose(recomputed.bound, selection.certificate.bound, rel_tol=1e-9,
                                     abs_tol=1e-300)):
                raise CertificateError(f"certificate of top {top} does not replay: stored "
                                       f"{selection.certificate}, recomputed {recomputed}")
            if not recomputed.holds():
                raise CertificateError(f"recomputed certificate of top {top} fails")

    def __len__(self) -> int:
        return len(self.selected)

    def __repr__(self) -> str:
        return (f"DecompositionResult(kind={self.kind}, alpha={self.alpha}, "
                f"selected={len(self.selected)}, remainder={int(self.remainder.sum())})")
