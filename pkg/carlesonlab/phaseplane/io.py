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
"""Line-oriented text format for tile collections.

    # carlesonlab-collection 1
    # n=256
    # c2=1.0
    ...
    2 0 -64
    2 0 -62

Header lines carry the grid length and every admissible constant; each following line is one
bitile as `scale position frequency`.
"""

import os
from pathlib import Path
from typing import Dict, TextIO, Union

from ..errors import FormatError
from .constants import AdmissibleConstants
from .tiles import Bitile, TileCollection

MAGIC = "# carlesonlab-collection 1"


def write_collection(collection: TileCollection, stream: TextIO) -> None:
    stream.write(MAGIC + "\n")
    stream.write(f"# n={collection.n}\n")
    for name, value in collection.constants.as_dict().items():
        stream.write(f"# {name}={'none' if value is None else repr(value)}\n")
    for bitile in collection:
        stream.write(f"{bitile.scale} {bitile.position} {bitile.frequency}\n")


def read_collection(stream: TextIO) -> TileCollection:
    """Raises:
        FormatError: The stream does not hold a collection.
    """
    lines = [line.strip() for line in stream if line.strip()]
    if not lines or lines[0] != MAGIC:
        raise FormatError("missing collection header")
    header: Dict[str, str] = {}
    records = []
    for number, line in enumerate(lines[1:], start=2):
        if line.startswith("#"):
            key, separator, value = line[1:].strip().partition("=")
            if not separator:
                raise FormatError(f"line {number}: header entry without value")
            header[key.strip()] = value.strip()
            continue
        fields = line.split()
        if len(fields) != 3:
            raise FormatError(f"line {number}: expected scale, position and frequency")
        try:
            records.append(tuple(int(field) for field in fields))
        except ValueError as e:
            raise FormatError(f"line {number}: {e}") from e

    try:
        n = int(header.pop("n"))
        constants = AdmissibleConstants(
            **{key: None if value == "none" else float(value)
               for key, value in header.items()})
    except (KeyError, ValueError, TypeError) as e:
        raise FormatError(f"invalid header: {e}") from e
    return TileCollection(n, constants, [Bitile(s, p, m, constants) for s, p, m in records])


def save_collection(collection: TileCollection, file_name: Union[os.PathLike, str]) -> None:
    with Path(file_name).open(mode="w", encoding="utf-8") as stream:
        write_collection(collection, stream)


def load_collection(file_name: Union[os.PathLike, str]) -> TileCollection:
    with Path(file_name).open(mode="r", encoding="utf-8") as stream:
        return read_collection(stream)
