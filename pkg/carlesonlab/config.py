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
"""Command line configuration for running carlesonlab."""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .harness.report import FORMATS


class PathArgument:
    _existing_file: bool
    _new_dir: bool

    def __init__(self, existing_file: bool = False, new_dir: bool = False):
        self._existing_file = existing_file
        self._new_dir = new_dir

    def __call__(self, value: str) -> Optional[Path]:
        if value is None:
            return None

        path = Path(value).resolve()

        if self._existing_file and not path.is_file():
            raise argparse.ArgumentTypeError(f"{value} does not point to an existing file.")
        if self._new_dir and path.is_file():
            raise argparse.ArgumentTypeError(f"{value} points to an existing file.")
        if not self._new_dir and not path.parent.exists():
            raise argparse.ArgumentTypeError(f"Directory to store {value} in does not exist.")

        return path


class Configuration(argparse.Namespace):
    """Configuration options for running carlesonlab.

    Populated from the command-line arguments and extended to include sensible default values.
    """
    command: str

    config_file: Optional[Path] = None
    report_file: Path
    seed: Optional[int] = None
    decomposition_dir: Optional[Path] = None

    out_dir: Path
    cache_dir: Optional[Path] = None
    formats: List[str]

    strict: bool
    progress: bool
    log: str


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)

    experiment_group = common.add_argument_group(title="Specifying the experiment")
    experiment_group.add_argument("-c",
                                  "--config",
                                  dest="config_file",
                                  metavar="CONFIG_FILE",
                                  default=None,
                                  type=PathArgument(existing_file=True),
                                  help="Experiment file (.json or .toml). Missing settings take"
                                  " their default values.")
    experiment_group.add_argument("--seed",
                                  metavar="SEED",
                                  default=None,
                                  type=int,
                                  help="Base seed of the trial streams. Overrides the experiment"
                                  " file.")

    output_group = common.add_argument_group(title="Controlling output")
    output_group.add_argument("-o",
                              "--out",
                              dest="out_dir",
                              metavar="OUT_DIR",
                              default="build",
                              type=PathArgument(new_dir=True),
                              help="Directory to write reports to.")
    output_group.add_argument("-f",
                              "--format",
                              dest="formats",
                              metavar="FORMAT",
                              action="append",
                              choices=FORMATS,
                              default=None,
                              help="Report format. Repeat for several formats. Defaults to json.")
    output_group.add_argument("--cache-dir",
                              metavar="CACHE_DIR",
                              default=None,
                              type=PathArgument(new_dir=True),
                              help="Directory for caching compiled report templates.")

    behavior_group = common.add_argument_group(title="carlesonlab behavior")
    behavior_group.add_argument("--strict",
                                action="store_true",
                                help="Fail with exit code 3 when a monitor is breached.")
    behavior_group.add_argument("--no-progress",
                                dest="progress",
                                action="store_false",
                                help="Do not show progress bars.")

    debug_group = common.add_argument_group(title="Debugging carlesonlab")
    debug_group.add_argument("--log",
                             metavar="LOG_LEVEL",
                             default="WARNING",
                             choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                             help="Set the log level.")
    return common


def parse_args(argv) -> Configuration:
    parser = argparse.ArgumentParser(
        description="Numerical experiments on weighted variational Fourier and Carleson bounds",
        allow_abbrev=False)
    common = _common_arguments()
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    commands.add_parser("variation",
                        parents=[common],
                        help="Norm ratios of the configured operator, by default the variation"
                        " of the Fourier partial sums.")
    commands.add_parser("carleson",
                        parents=[common],
                        help="Norm ratios of the variational Carleson operator.")
    commands.add_parser("apconst",
                        parents=[common],
                        help="A_p constants, doubling exponents and sharp-function equivalence"
                        " of the weight grid.")
    decompose_parser = commands.add_parser(
        "decompose",
        parents=[common],
        help="Certified size, density and two-parameter decompositions.")
    decompose_parser.add_argument("--save-decomposition",
                                  dest="decomposition_dir",
                                  metavar="DIR",
                                  default=None,
                                  type=PathArgument(new_dir=True),
                                  help="Save the size and density decompositions to DIR and"
                                  " replay their certificates from the saved files.")
    commands.add_parser("tree-estimate",
                        parents=[common],
                        help="Growth of the single-tree estimate ratios against N.")
    commands.add_parser("lepingle",
                        parents=[common],
                        help="Weighted variational inequality for Littlewood-Paley families.")
    commands.add_parser("sweep-r",
                        parents=[common],
                        help="Largest norm ratios over the grid of r, weights and N.")
    report_parser = commands.add_parser("report",
                                        parents=[common],
                                        help="Verify a saved report and render it again.")
    report_parser.add_argument("report_file",
                               metavar="REPORT_FILE",
                               type=PathArgument(existing_file=True),
                               help="JSON report written by an earlier run.")

    if argv is None:
        argv = sys.argv[1:]

    config = Configuration()
    config = parser.parse_args(argv, namespace=config)

    if config.formats is None:
        config.formats = ["json"]
    if config.cache_dir is None:
        config.cache_dir = config.out_dir / "cache"

    return config
