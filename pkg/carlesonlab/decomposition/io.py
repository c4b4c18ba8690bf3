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
"""JSON persistence of decomposition results."""

import io
import json
import logging
import os
from typing import Optional, Union

import numpy as np

from .._version import __version__
from ..errors import CertificateError, FormatError
from ..fourier import Signal
from ..model import json_repr
from ..phaseplane import Linearization, TileCollection, Top, Tree, read_collection, write_collection
from ..weights import DyadicInterval, Weight
from .result import Certificate, DecompositionResult, SelectedTree

logger = logging.getLogger(__name__)

FORMAT = "carlesonlab-decomposition"


def _top_data(top: Top):
    return {"level": top.interval.level, "index": top.interval.index, "xi": repr(top.xi)}


def _tree_data(tree: Tree):
    return {"top": _top_data(tree.top), "members": tree.members}


def decomposition_data(result: DecompositionResult):
    text = io.StringIO()
    write_collection(result.collection, text)
    return {
        "format": FORMAT,
        "version": __version__,
        "kind": result.kind,
        "alpha": repr(result.alpha),
        "collection": text.getvalue(),
        "selected": [{
            **_tree_data(selection.tree),
            "witness": None if selection.witness is None else selection.witness.members,
            "companions": [_tree_data(companion) for companion in selection.companions],
            "certificate": {
                "mass": repr(selection.certificate.mass),
                "bound": repr(selection.certificate.bound),
            },
        } for selection in result.selected],
        "remainder": np.flatnonzero(result.remainder),
    }


def save_decomposition(result: DecompositionResult, file_name: Union[os.PathLike, str]) -> None:
    with open(file_name, "w", encoding="utf-8") as file:
        json.dump(decomposition_data(result), file, default=json_repr, indent=2)


def _top(data) -> Top:
    return Top(DyadicInterval(int(data["level"]), int(data["index"])), float(data["xi"]))


def decomposition_from_data(data) -> DecompositionResult:
    """Rebuild a result and re-verify its partition and certificates.

    Raises:
        FormatError:      The data is not a decomposition.
        CertificateError: A stored certificate fails.
    """
    if not isinstance(data, dict) or data.get("format") != FORMAT:
        raise FormatError("not a carlesonlab decomposition")
    try:
        collection: TileCollection = read_collection(io.StringIO(data["collection"]))
        kind = data["kind"]
        selected = []
        for entry in data["selected"]:
            top = _top(entry["top"])
            tree = Tree(collection, entry["members"], top)
            witness = None if entry["witness"] is None else Tree(collection, entry["witness"], top)
            companions = tuple(
                Tree(collection, companion["members"], _top(companion["top"]))
                for companion in entry["companions"])
            certificate = Certificate(kind, float(entry["certificate"]["mass"]),
                                      float(entry["certificate"]["bound"]))
            selected.append(SelectedTree(tree, witness, certificate, companions))
        remainder = np.zeros(len(collection), dtype=bool)
        remainder[np.asarray(data["remainder"], dtype=np.int64)] = True
        result = DecompositionResult(collection, selected, remainder, float(data["alpha"]), kind)
    except (KeyError, TypeError, ValueError, IndexError) as error:
        raise FormatError(f"malformed decomposition: {error}") from error
    result.verify()
    return result


def load_decomposition(file_name: Union[os.PathLike, str]) -> DecompositionResult:
    with open(file_name, encoding="utf-8") as file:
        try:
            data = json.load(file)
        except json.JSONDecodeError as error:
            raise FormatError(f"{file_name}: {error}") from error
    return decomposition_from_data(data)


def replay_decomposition(file_name: Union[os.PathLike, str],
                         w: Weight,
                         f: Optional[Signal] = None,
                         g: Optional[Signal] = None,
                         lin: Optional[Linearization] = None) -> DecompositionResult:
    """Load a saved result and recompute every certificate from the given inputs."""
    result = load_decomposition(file_name)
    try:
        result.recheck(w, f, g, lin)
    except CertificateError:
        logger.error(f"Replay of {file_name} failed")
        raise
    logger.info(f"Replayed {len(result)} certificates from {file_name}")
    return result
