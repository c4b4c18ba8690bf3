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
"""Errors raised by the numerical building blocks and the experiment harness."""

from typing import Optional, Sequence

from ._version import __version__


class LabError(Exception):
    """Base class for all errors raised by carlesonlab."""
    pass


class SizingError(LabError):
    """The length of a sampled grid is not supported.

    Attributes:
        size:     Offending length.
        expected: Required length, if the error is a mismatch between two grids.
    """
    size: int
    expected: Optional[int]

    def __init__(self, size: int, expected: Optional[int] = None):
        self.size = size
        self.expected = expected

    def __str__(self) -> str:
        if self.expected is not None:
            return f"Grid of length {self.size} does not match grid of length {self.expected}"
        return f"Grid length {self.size} is not a power of two of at least 8"


class FrequencyRangeError(LabError):
    """A frequency, or a band of frequencies, lies outside the resolvable spectrum.

    Attributes:
        frequency: Offending frequency.
        limit:     Largest admissible absolute frequency.
    """
    frequency: float
    limit: float

    def __init__(self, frequency: float, limit: float):
        self.frequency = frequency
        self.limit = limit

    def __str__(self) -> str:
        return (f"Frequency {self.frequency} is outside the resolvable range "
                f"[-{self.limit}, {self.limit}]")


class ExponentError(LabError):
    """An exponent or threshold parameter is outside its admissible range.

    Attributes:
        name:        Name of the parameter.
        value:       Offending value.
        requirement: Human readable admissible range.
    """
    name: str
    value: float
    requirement: str

    def __init__(self, name: str, value: float, requirement: str):
        self.name = name
        self.value = value
        self.requirement = requirement

    def __str__(self) -> str:
        return f"Invalid {self.name} = {self.value}: requires {self.requirement}"


class MessageError(LabError):
    """Base class for errors described by a single message.

    Attributes:
        message: Details of the error.
    """
    message: str
    prefix: str = "Error"

    def __init__(self, message: str):
        self.message = message

    def __str__(self) -> str:
        return f"{self.prefix}: {self.message}"


class ConstantsError(MessageError):
    """Admissible constants, or the separation preconditions derived from them, are violated."""
    prefix = "Inadmissible constants"


class TreeTypeError(MessageError):
    """A tree does not have the type required by an operation."""
    prefix = "Invalid tree"


class IntervalError(MessageError):
    """A dyadic interval does not support the requested operation."""
    prefix = "Invalid interval"


class CertificateError(MessageError):
    """A stored certificate does not hold when re-verified."""
    prefix = "Certificate failed"


class DegenerateFamilyError(MessageError):
    """A test family produced only signals of norm zero."""
    prefix = "Degenerate test family"


class ConfigError(MessageError):
    """The experiment configuration is not valid."""
    prefix = "Invalid configuration"


class FormatError(MessageError):
    """A serialized collection, decomposition or report cannot be read."""
    prefix = "Invalid file contents"


class MonitorBreachError(LabError):
    """One or more monitors failed while running in strict mode.

    Attributes:
        names: Names of the failed monitors.
    """
    names: Sequence[str]

    def __init__(self, names: Sequence[str]):
        self.names = list(names)

    def __str__(self) -> str:
        return f"Monitors breached: {', '.join(self.names)}"


class IncompatibleVersionError(LabError):
    """A saved report requires a different version of carlesonlab.

    Attributes:
        required_version: The version specifier stored in the report.
    """
    required_version: str

    def __init__(self, required_version: str):
        self.required_version = required_version

    def __str__(self) -> str:
        return (f"Report requires carlesonlab version {self.required_version}. Current "
                f"version: {__version__}")
