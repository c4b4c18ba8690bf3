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
"""Tests for experiment reports."""

import csv
import json
import math

import pytest

from carlesonlab._version import __version__
from carlesonlab.errors import FormatError, IncompatibleVersionError
from carlesonlab.harness import ExperimentConfig, ExperimentReport, load_report
from carlesonlab.harness.cache import TemplateCache, layout_plot, path_of
from carlesonlab.harness.report import compatible_versions


@pytest.fixture
def report():
    config = ExperimentConfig(n=64, seed=7)
    report = ExperimentReport("demo", config.as_dict(), config.digest(), config.seed)
    report.add_table("ratios", ["n", "ratio"], [[64, 1.25], [128, math.inf]])
    report.summary["max"] = 1.25
    report.monitor("within", 0.5, 1.0)
    report.monitor("above", 2.0, 1.0)
    report.monitor("explicit", math.nan, ok=True)
    report.add_plot("Ratios", "N", "ratio", {"r=4": [(64, 1.25), (128, 1.5)]})
    return report


def test_monitor__verdicts(report):
    assert report.monitors["within"].ok
    assert not report.monitors["above"].ok
    assert report.monitors["explicit"].ok
    assert report.monitor("unbounded", 1e9).ok
    assert not report.monitor("infinite", math.inf, 1.0).ok
    assert report.breaches() == ["above", "infinite"]


def test_monitor__logs_breach(report, caplog):
    report.monitor("late", 3.0, 1.0)
    assert "Monitor late breached" in caplog.text


def test_to_json__hash_and_version(report):
    data = json.loads(report.to_json())
    assert data["format"] == "carlesonlab-report"
    assert data["version"] == __version__
    assert data["requires"] == compatible_versions()
    assert data["hash"] == report.digest()
    assert data["tables"]["ratios"]["rows"][1] == [128, "inf"]


def test_from_data__restores_report(report):
    restored = ExperimentReport.from_data(json.loads(report.to_json()))
    assert restored.digest() == report.digest()
    assert restored.breaches() == report.breaches()
    assert restored.config_hash == report.config_hash


def test_from_data__tampered(report):
    data = json.loads(report.to_json())
    data["summary"]["max"] = 0.5
    with pytest.raises(FormatError):
        ExperimentReport.from_data(data)


def test_from_data__incompatible_version(report):
    data = json.loads(report.to_json())
    data["requires"] = ">=999.0"
    with pytest.raises(IncompatibleVersionError):
        ExperimentReport.from_data(data)


@pytest.mark.parametrize("data", [[], {"format": "other"}, {"format": "carlesonlab-report"}])
def test_from_data__malformed(data):
    with pytest.raises(FormatError):
        ExperimentReport.from_data(data)


def test_save__all_formats(report, tmp_path):
    written = report.save(tmp_path / "out", ["json", "csv", "svg"], tmp_path / "cache")
    names = sorted(path.name for path in written)
    assert names == ["demo-plot0.svg", "demo-ratios.csv", "demo.json"]
    with (tmp_path / "out" / "demo-ratios.csv").open(newline="") as file:
        rows = list(csv.reader(file))
    assert rows[0] == ["n", "ratio"]
    assert rows[2] == ["128", "inf"]
    svg = (tmp_path / "out" / "demo-plot0.svg").read_text()
    assert "<svg" in svg
    assert "Ratios" in svg
    assert load_report(tmp_path / "out" / "demo.json").digest() == report.digest()


def test_save__json_only(report, tmp_path):
    assert [path.name for path in report.save(tmp_path)] == ["demo.json"]


def test_load_report__not_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    with pytest.raises(FormatError):
        load_report(path)


def test_render_summary(report, tmp_path):
    text = report.render_summary(tmp_path / "cache")
    assert text.startswith("demo (carlesonlab")
    assert "BREACH above" in text
    assert "ok     within" in text
    assert "ratios" in text


def test_layout_plot__drops_points_off_log_axis():
    layout = layout_plot({
        "title": "t",
        "x_label": "x",
        "y_label": "y",
        "log_x": True,
        "log_y": True,
        "series": {"a": [[1, 1], [10, 100], [0, 5], [10, -1]]},
    })
    assert len(layout["series"]["a"]) == 2
    assert layout["x_label"] == "x (log10)"
    assert layout["series"]["a"][0] == (60, 340)
    assert layout["series"]["a"][1] == (580, 60)


def test_layout_plot__empty_series():
    layout = layout_plot({"title": "t", "x_label": "x", "y_label": "y", "log_x": False,
                          "log_y": False, "series": {"a": []}})
    assert layout["x_range"] == (0.0, 1.0)


def test_path_of():
    assert path_of([(1, 2), (3.5, 4)]) == "1,2 3.5,4"


def test_template_cache__packaged_templates_with_module_cache(tmp_path):
    cache = TemplateCache(cache_dir=tmp_path)
    summary = cache.render_summary(ExperimentReport("x", {}, "0" * 64, 0))
    assert "x" in summary
    assert (tmp_path / "templates").is_dir()
    assert cache.get_template("/summary.txt.mako") is cache.get_template("summary.txt.mako")
