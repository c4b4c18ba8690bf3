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
"""Mako template lookup for report renderings shipped as package resources."""

import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from mako.exceptions import TopLevelLookupException
from mako.lookup import TemplateLookup
from mako.template import Template

import carlesonlab.harness.templates

if sys.version_info >= (3, 9):
    import importlib.resources as importlib_resources
else:
    import importlib_resources

PLOT_WIDTH = 640
PLOT_HEIGHT = 400
PLOT_MARGIN = 60


class TemplateCache(TemplateLookup):
    """Report templates loaded from the package resources.

    File system checks for changes to the templates are disabled.
    """
    def __init__(self,
                 cache_dir: Optional[Path] = None,
                 *args,
                 **kwargs):
        if cache_dir is not None:
            named_cache_dir = cache_dir / "templates"
            named_cache_dir.mkdir(parents=True, exist_ok=True)
            kwargs["module_directory"] = str(named_cache_dir)
        kwargs.setdefault("filesystem_checks", False)
        kwargs.setdefault("input_encoding", "utf-8")
        super().__init__(*args, **kwargs)

    def get_template(self, uri: str) -> Template:
        if uri.startswith("/"):
            uri = uri[1:]
        try:
            return super().get_template(uri)

        except TopLevelLookupException:
            source = importlib_resources.files(carlesonlab.harness.templates).joinpath(uri)
            if source.is_file():
                with importlib_resources.as_file(source) as source_file:
                    template = Template(uri=uri,
                                        filename=str(source_file),
                                        lookup=self,
                                        **self.template_args)
                self.put_template(uri, template)
                return template
            else:
                raise

    def render_plot(self, plot: Dict[str, Any]) -> str:
        return self.get_template("line_plot.svg.mako").render(path_of=path_of, **layout_plot(plot))

    def render_summary(self, report) -> str:
        return self.get_template("summary.txt.mako").render(report=report)


def _axis(values: List[float], logarithmic: bool) -> Tuple[float, float]:
    low, high = min(values), max(values)
    if low == high:
        return (low - 1, high + 1) if not logarithmic else (low - 0.5, high + 0.5)
    return low, high


def layout_plot(plot: Dict[str, Any]) -> Dict[str, Any]:
    """Pixel coordinates for every series; points that cannot be drawn on a log axis are dropped."""
    def transform(value, logarithmic):
        value = float(value)
        if not math.isfinite(value) or (logarithmic and value <= 0):
            return None
        return math.log10(value) if logarithmic else value

    series = {}
    for name, points in plot["series"].items():
        kept = []
        for x, y in points:
            tx, ty = transform(x, plot["log_x"]), transform(y, plot["log_y"])
            if tx is not None and ty is not None:
                kept.append((tx, ty))
        series[name] = kept

    everything = [point for points in series.values() for point in points]
    if everything:
        x_range = _axis([x for x, _ in everything], plot["log_x"])
        y_range = _axis([y for _, y in everything], plot["log_y"])
    else:
        x_range = y_range = (0.0, 1.0)

    inner_width = PLOT_WIDTH - 2 * PLOT_MARGIN
    inner_height = PLOT_HEIGHT - 2 * PLOT_MARGIN

    def pixel(point):
        x, y = point
        px = PLOT_MARGIN + (x - x_range[0]) / (x_range[1] - x_range[0]) * inner_width
        py = PLOT_HEIGHT - PLOT_MARGIN - (y - y_range[0]) / (y_range[1] - y_range[0]) * inner_height
        return round(px, 2), round(py, 2)

    return {
        "title": plot["title"],
        "x_label": plot["x_label"] + (" (log10)" if plot["log_x"] else ""),
        "y_label": plot["y_label"] + (" (log10)" if plot["log_y"] else ""),
        "width": PLOT_WIDTH,
        "height": PLOT_HEIGHT,
        "margin": PLOT_MARGIN,
        "x_range": x_range,
        "y_range": y_range,
        "series": {name: [pixel(point) for point in points] for name, points in series.items()},
    }


def path_of(points: List[Tuple[float, float]]) -> str:
    """SVG polyline point list."""
    return " ".join(f"{x},{y}" for x, y in points)
