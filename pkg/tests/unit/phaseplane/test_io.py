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
"""Tests for reading and writing bitile collections."""

import io

import pytest

from carlesonlab.errors import FormatError
from carlesonlab.phaseplane import (
    AdmissibleConstants,
    load_collection,
    read_collection,
    save_collection,
    write_collection,
)


def test_write_collection__header(two_scale_collection):
    stream = io.StringIO()
    write_collection(two_scale_collection, stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == "# carlesonlab-collection 1"
    assert lines[1] == "# n=256"
    assert len([line for line in lines if not line.startswith("#")]) == len(two_scale_collection)


def test_read_collection__restores_bitiles(two_scale_collection):
    stream = io.StringIO()
    write_collection(two_scale_collection, stream)
    stream.seek(0)
    restored = read_collection(stream)
    assert restored.n == 256
    assert restored.constants == two_scale_collection.constants
    assert restored.bitiles == two_scale_collection.bitiles


def test_save_collection__file(tmp_path, collection):
    target = tmp_path / "collection.txt"
    save_collection(collection, target)
    assert load_collection(target).bitiles == collection.bitiles


def test_read_collection__nonclassical_constants():
    constants = AdmissibleConstants(c2=1.5, c21=1.5, c22=1.5, c1=2.0)
    stream = io.StringIO("# carlesonlab-collection 1\n# n=64\n" +
                         "".join(f"# {key}={'none' if value is None else repr(value)}\n"
                                 for key, value in constants.as_dict().items()))
    assert read_collection(stream).constants == constants


@pytest.mark.parametrize("text", [
    "",
    "2 0 -16\n",
    "# carlesonlab-collection 1\n# n=64\n2 0\n",
    "# carlesonlab-collection 1\n# n=64\n2 zero -16\n",
    "# carlesonlab-collection 1\n2 0 -16\n",
    "# carlesonlab-collection 1\n# n\n",
    "# carlesonlab-collection 1\n# n=64\n# c9=1.0\n",
])
def test_read_collection__malformed(text):
    with pytest.raises(FormatError):
        read_collection(io.StringIO(text))
