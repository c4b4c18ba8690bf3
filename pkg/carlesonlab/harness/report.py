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
"""Experiment reports: tables, monitors, plots and their JSON, CSV and SVG renderings."""

import csv
import hashlib
import json
import logging
import math
import os
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Union

from packaging.specifiers import SpecifierSet
from packaging.version import Version

from .._version import __version__
from ..errors import FormatError, IncompatibleVersionError
from ..model import json_repr
from .cache import TemplateCache

logger = logging.getLogger(__name__)

FORMAT = "carlesonlab-report"
FORMATS = ("json", "csv", "svg")


def compatible_versions() -> str:
    """Specifier accepting the releases that share the running minor version."""
    version = Version(__version__)
    return f">={version.major}.{version.minor},<{version.major}.{version.minor + 1}"


def _plain(value: Any) -> Any:
    """JSON-safe form; non-finite floats become strings."""
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return _plain(value.item())
    return value


class Table(NamedTuple):
    columns: List[str]
    rows: List[List[Any]]


class Monitor(NamedTuple):
    """A monitored quantity and whether it stayed within its limit."""
    value: float
    limit: Optional[float]
    ok: bool


class ExperimentReport:
    """Outcome of one experiment.

    Attributes:
        kind:        Experiment that produced the report.
        config:      Configuration, as a plain mapping.
        config_hash: SHA-256 of the canonical configuration.
        seed:        Base seed of the trial streams.
        version:     Package version that produced the report.
        requires:    Version specifier under which the report can be replayed.
        tables:      Named result tables.
        summary:     Scalar results.
        monitors:    Monitored quantities.
        plots:       Line plots: title, axis labels and named series of (x, y) points.
        annotations: Free-form remarks, such as the exponent threshold of the run.
    """
    kind: str
    config: Dict[str, Any]
    config_hash: str
    seed: int
    version: str
    requires: str
    tables: Dict[str, Table]
    summary: Dict[str, Any]
    monitors: Dict[str, Monitor]
    plots: List[Dict[str, Any]]
    annotations: Dict[str, Any]

    def __init__(self, kind: str, config: Dict[str, Any], config_hash: str, seed: int):
        self.kind = kind
        self.config = config
        self.config_hash = config_hash
        self.seed = seed
        self.version = __version__
        self.requires = compatible_versions()
        self.tables = {}
        self.summary = {}
        self.monitors = {}
        self.plots = []
        self.annotations = {}

    def add_table(self, name: str, columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
        self.tables[name] = Table(list(columns), [list(row) for row in rows])

    def monitor(self, name: str, value: float, limit: Optional[float] = None,
                ok: Optional[bool] = None) -> Monitor:
        """Record a monitor; without an explicit verdict it passes when value <= limit."""
        if ok is None:
            ok = limit is None or (math.isfinite(value) and value <= limit)
        entry = Monitor(float(value), limit, bool(ok))
        self.monitors[name] = entry
        if not entry.ok:
            logger.warning(f"Monitor {name} breached: {value!r} (limit {limit!r})")
        return entry

    def add_plot(self, title: str, x_label: str, y_label: str, series: Dict[str, Sequence],
                 log_x: bool = True, log_y: bool = True) -> None:
        self.plots.append({
            "title": title,
            "x_label": x_label,
            "y_label": y_label,
            "log_x": log_x,
            "log_y": log_y,
            "series": {name: [list(point) for point in points]
                       for name, points in series.items()},
        })

    def breaches(self) -> List[str]:
        return [name for name, entry in self.monitors.items() if not entry.ok]

    def data(self) -> Dict[str, Any]:
        """Canonical mapping without the report hash."""
        return _plain({
            "format": FORMAT,
            "kind": self.kind,
            "version": self.version,
            "requires": self.requires,
            "config": self.config,
            "config_hash": self.config_hash,
            "seed": self.seed,
            "tables": {name: table._asdict() for name, table in self.tables.items()},
            "summary": self.summary,
            "monitors": {name: entry._asdict() for name, entry in self.monitors.items()},
            "plots": self.plots,
            "annotations": self.annotations,
        })

    def digest(self) -> str:
        text = json.dumps(self.data(), sort_keys=True, default=json_repr)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def to_json(self) -> str:
        data = self.data()
        data["hash"] = self.digest()
        return json.dumps(data, sort_keys=True, indent=2, default=json_repr)

    def save(self, out_dir: Union[os.PathLike, str], formats: Sequence[str] = ("json", ),
             cache_dir: Optional[Path] = None) -> List[Path]:
        """Write the report in every requested format; returns the written files."""
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        written = []
        if "json" in formats:
            path = out_dir / f"{self.kind}.json"
            path.write_text(self.to_json(), encoding="utf-8")
            written.append(path)
        if "csv" in formats:
            for name, table in self.tables.items():
                path = out_dir / f"{self.kind}-{name}.csv"
                with path.open("w", encoding="utf-8", newline="") as file:
                    writer = csv.writer(file)
                    writer.writerow(table.columns)
                    writer.writerows(_plain(table.rows))
                written.append(path)
        if "svg" in formats:
            templates = TemplateCache(cache_dir=cache_dir)
            for number, plot in enumerate(self.plots):
                path = out_dir / f"{self.kind}-plot{number}.svg"
                path.write_text(templates.render_plot(plot), encoding="utf-8")
                written.append(path)
        logger.info(f"Wrote {len(written)} report files to {out_dir}")
        return written

    def render_summary(self, cache_dir: Optional[Path] = None) -> str:
        return TemplateCache(cache_dir=cache_dir).render_summary(self)

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> "ExperimentReport":
        """Rebuild a report and check its hash and version requirement.

        Raises:
            FormatError:              Not a report, or its hash does not match its content.
            IncompatibleVersionError: The running version does not satisfy the stored specifier.
        """
        if not isinstance(data, dict) or data.get("format") != FORMAT:
            raise FormatError("not a carlesonlab report")
        try:
            if Version(__version__) not in SpecifierSet(data["requires"]):
                raise IncompatibleVersionError(data["requires"])
            report = cls(data["kind"], data["config"], data["config_hash"], data["seed"])
            report.version = data["version"]
            report.requires = data["requires"]
            report.tables = {
                name: Table(table["columns"], table["rows"])
                for name, table in data["tables"].items()
            }
            report.summary = data["summary"]
            report.monitors = {
                name: Monitor(entry["value"], entry["limit"], entry["ok"])
                for name, entry in data["monitors"].items()
            }
            report.plots = data["plots"]
            report.annotations = data["annotations"]
            stored = data["hash"]
        except (KeyError, TypeError) as error:
            raise FormatError(f"malformed report: {error}") from error
        if report.digest() != stored:
            raise FormatError("report hash does not match its content")
        return report

    def __repr__(self) -> str:
        return f"ExperimentReport(kind={self.kind}, tables={list(self.tables)})"


def load_report(file_name: Union[os.PathLike, str]) -> ExperimentReport:
    with open(file_name, encoding="utf-8") as file:
        try:
            data = json.load(file)
        except json.JSONDecodeError as error:
            raise FormatError(f"{file_name}: {error}") from error
    return ExperimentReport.from_data(data)
