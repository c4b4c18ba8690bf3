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

import argparse

import pytest

from carlesonlab.config import PathArgument, parse_args


def test_parse_args__defaults(tmp_path):
    config = parse_args(["apconst", "-o", str(tmp_path / "out")])
    assert config.command == "apconst"
    assert config.config_file is None
    assert config.seed is None
    assert config.out_dir == (tmp_path / "out").resolve()
    assert config.cache_dir == config.out_dir / "cache"
    assert config.formats == ["json"]
    assert config.strict is False
    assert config.progress is True
    assert config.log == "WARNING"


def test_parse_args__options(tmp_path):
    config_file = tmp_path / "experiment.toml"
    config_file.write_text("n = 64\n")
    config = parse_args([
        "sweep-r", "-c",
        str(config_file), "--seed", "5", "-o",
        str(tmp_path), "-f", "csv", "-f", "svg", "--cache-dir",
        str(tmp_path / "templates"), "--strict", "--no-progress", "--log", "DEBUG"
    ])
    assert config.config_file == config_file.resolve()
    assert config.seed == 5
    assert config.formats == ["csv", "svg"]
    assert config.cache_dir == (tmp_path / "templates").resolve()
    assert config.strict is True
    assert config.progress is False
    assert config.log == "DEBUG"


def test_parse_args__save_decomposition(tmp_path):
    config = parse_args(["decompose", "--save-decomposition", str(tmp_path / "saved")])
    assert config.decomposition_dir == (tmp_path / "saved").resolve()
    assert parse_args(["decompose"]).decomposition_dir is None


def test_parse_args__report(tmp_path):
    report_file = tmp_path / "report.json"
    report_file.write_text("{}")
    config = parse_args(["report", str(report_file)])
    assert config.command == "report"
    assert config.report_file == report_file.resolve()


@pytest.mark.parametrize("argv", [
    ["unknown"],
    ["variation", "-f", "pdf"],
    ["variation", "--log", "LOUD"],
    ["variation", "--seed", "one"],
    ["report"],
    ["variation", "--save-decomposition", "saved"],
])
def test_parse_args__invalid(argv):
    with pytest.raises(SystemExit) as exc_info:
        parse_args(argv)
    assert exc_info.value.code != 0


def test_path_argument__existing_file(tmp_path):
    existing = tmp_path / "file.json"
    existing.write_text("{}")
    assert PathArgument(existing_file=True)(str(existing)) == existing.resolve()
    with pytest.raises(argparse.ArgumentTypeError):
        PathArgument(existing_file=True)(str(tmp_path / "missing.json"))


def test_path_argument__new_dir(tmp_path):
    existing = tmp_path / "file.json"
    existing.write_text("{}")
    assert PathArgument(new_dir=True)(str(tmp_path / "a" / "b")) == (tmp_path / "a" /
                                                                      "b").resolve()
    with pytest.raises(argparse.ArgumentTypeError):
        PathArgument(new_dir=True)(str(existing))


def test_path_argument__missing_parent(tmp_path):
    with pytest.raises(argparse.ArgumentTypeError):
        PathArgument()(str(tmp_path / "missing" / "file.json"))
    assert PathArgument()(None) is None
