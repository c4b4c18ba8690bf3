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
"""Experiment configuration loaded from JSON or TOML files."""

import hashlib
import json
import logging
import math
import os
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

import toml

from ..errors import ConfigError, LabError
from ..fourier import check_grid_size
from ..model import ModelBase, json_repr

logger = logging.getLogger(__name__)

OPERATORS = ("partial_sum", "variation", "truncation", "maximal")
FAMILIES = ("random", "dirichlet", "lacunary", "smoothed_indicator", "tone")
WEIGHTS = ("lebesgue", "power", "csv")
FAMILY_KEYS = {"kind", "degree", "frequency"}
WEIGHT_KEYS = {"kind", "a", "path"}
# Output locations that do not change the computed numbers.
UNHASHED_KEYS = ("save_decomposition",)


def _exponent(value: Any, name: str) -> float:
    """Exponent from a number or one of the strings "inf" and "infinity"."""
    if isinstance(value, str) and value.lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(value)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"{name} must be a number, got {value!r}") from error


class ExperimentConfig(ModelBase):
    """Parameters of one experiment.

    Missing keys keep the defaults below. Grids default to the single value of the matching
    scalar.
    """
    n: int = 256
    n_grid: List[int] = []
    weight: Dict[str, Any] = {"kind": "lebesgue"}
    weight_grid: List[float] = []
    p: float = 2.0
    q: float = 1.5
    q0: float = 2.0
    r: float = 4.0
    r_grid: List[float] = []
    operator: str = "variation"
    partial_n: int = 8
    family: Dict[str, Any] = {"kind": "random", "degree": 16}
    trials: int = 16
    seed: int = 0
    alpha: Optional[float] = None
    scales: int = 2
    max_bitiles: int = 200
    tail_shells: int = 3
    lp_constant: float = 2.0
    monitor_constant: float = 16.0
    p_grid: List[float] = [1.5, 2.0, 3.0]
    save_decomposition: Optional[str] = None

    def __init__(self, **kwargs):
        try:
            super().__init__(**kwargs)
        except TypeError as error:
            raise ConfigError(str(error)) from error
        self._normalize()
        self.validate()

    def _normalize(self) -> None:
        self.n = int(self.n)
        self.n_grid = [int(v) for v in (self.n_grid or [self.n])]
        self.weight = dict(self.weight)
        self.weight_grid = [float(v) for v in (self.weight_grid or [self.weight.get("a", 0.0)])]
        self.p = _exponent(self.p, "p")
        self.q = _exponent(self.q, "q")
        self.q0 = _exponent(self.q0, "q0")
        self.r = _exponent(self.r, "r")
        self.r_grid = [_exponent(v, "r_grid") for v in (self.r_grid or [self.r])]
        self.p_grid = [_exponent(v, "p_grid") for v in self.p_grid]
        self.family = dict(self.family)
        self.trials = int(self.trials)
        self.seed = int(self.seed)
        self.alpha = None if self.alpha is None else float(self.alpha)
        self.monitor_constant = float(self.monitor_constant)
        if self.save_decomposition is not None:
            self.save_decomposition = str(self.save_decomposition)

    def validate(self) -> None:
        """Raises:
            ConfigError: A value is out of range or a spec cannot be resolved.
        """
        try:
            for n in [self.n] + self.n_grid:
                check_grid_size(n)
        except LabError as error:
            raise ConfigError(f"invalid grid size: {error}") from error
        if not self.p > 1:
            raise ConfigError(f"p = {self.p} must exceed 1")
        if not 1 <= self.q < self.p:
            raise ConfigError(f"q = {self.q} must satisfy 1 <= q < p = {self.p}")
        if not self.q0 > 1:
            raise ConfigError(f"q0 = {self.q0} must exceed 1")
        for r in [self.r] + self.r_grid:
            if not r >= 1:
                raise ConfigError(f"r = {r} must be at least 1")
        if self.r_grid != sorted(self.r_grid):
            raise ConfigError(f"r_grid {self.r_grid} is not sorted ascending")
        if self.operator not in OPERATORS:
            raise ConfigError(f"unknown operator {self.operator}; expected one of {OPERATORS}")
        if self.family.get("kind") not in FAMILIES:
            raise ConfigError(f"unknown family {self.family.get('kind')}; expected one of "
                              f"{FAMILIES}")
        if set(self.family) - FAMILY_KEYS:
            raise ConfigError(f"unknown family keys {sorted(set(self.family) - FAMILY_KEYS)}")
        if self.weight.get("kind") not in WEIGHTS:
            raise ConfigError(f"unknown weight {self.weight.get('kind')}; expected one of "
                              f"{WEIGHTS}")
        if set(self.weight) - WEIGHT_KEYS:
            raise ConfigError(f"unknown weight keys {sorted(set(self.weight) - WEIGHT_KEYS)}")
        if self.weight["kind"] == "csv" and not self.weight.get("path"):
            raise ConfigError("a csv weight needs a path")
        if self.trials < 1:
            raise ConfigError(f"trials = {self.trials} must be at least 1")
        if self.alpha is not None and not self.alpha > 0:
            raise ConfigError(f"alpha = {self.alpha} must be positive")
        if self.scales < 1 or self.max_bitiles < 0 or self.tail_shells < 0:
            raise ConfigError("scales must be positive, max_bitiles and tail_shells nonnegative")
        if not self.monitor_constant > 0:
            raise ConfigError(f"monitor_constant = {self.monitor_constant} must be positive")
        if not 1 <= self.partial_n <= max(self.n_grid) // 2:
            raise ConfigError(f"partial_n = {self.partial_n} outside 1..N/2")

    @property
    def threshold(self) -> float:
        """max(2q, pq/(p - q)): the smallest r covered by the weighted variational bound."""
        return max(2 * self.q, self.p * self.q / (self.p - self.q))

    def clears_threshold(self, r: float) -> bool:
        return r > self.threshold

    def annotations(self) -> Dict[str, Any]:
        return {
            "threshold": self.threshold,
            "clears_threshold": {repr(r): self.clears_threshold(r)
                                 for r in self.r_grid},
        }

    def as_dict(self) -> Dict[str, Any]:
        data = super().as_dict()
        for name in ("p", "q", "q0", "r"):
            if math.isinf(data[name]):
                data[name] = "inf"
        data["r_grid"] = ["inf" if math.isinf(r) else r for r in data["r_grid"]]
        return data

    def digest(self) -> str:
        """SHA-256 of the canonical JSON form."""
        data = {k: v for k, v in self.as_dict().items() if k not in UNHASHED_KEYS}
        text = json.dumps(data, sort_keys=True, default=json_repr)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def with_overrides(self, **overrides) -> "ExperimentConfig":
        data = self.as_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return ExperimentConfig(**data)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "ExperimentConfig":
        if not isinstance(data, Mapping):
            raise ConfigError("experiment configuration must be a table of settings")
        return cls(**data)

    def __repr__(self) -> str:
        return f"ExperimentConfig({self.as_dict()})"


def load_experiment(file_name: Union[os.PathLike, str]) -> ExperimentConfig:
    """Read an experiment from a `.json` or `.toml` file.

    Raises:
        ConfigError: The file cannot be parsed or holds invalid settings.
    """
    path = Path(file_name)
    try:
        if path.suffix == ".toml":
            data = toml.load(path)
        elif path.suffix == ".json":
            with path.open(encoding="utf-8") as file:
                data = json.load(file)
        else:
            raise ConfigError(f"{path}: expected a .json or .toml file")
    except (toml.TomlDecodeError, json.JSONDecodeError, OSError) as error:
        raise ConfigError(f"{path}: {error}") from error
    weight = data.get("weight") if isinstance(data, Mapping) else None
    if isinstance(weight, Mapping) and weight.get("kind") == "csv" and "path" in weight:
        # Weight files are looked up next to the experiment file.
        data["weight"] = dict(weight, path=str(path.parent / weight["path"]))
    config =ExperimentConfig.from_mapping(data)
    logger.debug(f"Loaded {config} from {path}")
    return config
