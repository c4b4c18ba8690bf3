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
"""Command line interface."""

import logging
import sys
from typing import Callable, Dict, Optional, Sequence

from tqdm import tqdm

from ._version import __version__
from .config import Configuration, parse_args
from .errors import ConfigError, FormatError, IncompatibleVersionError, MonitorBreachError
from .harness import (
    ExperimentConfig,
    ExperimentReport,
    apconst_report,
    estimate_norm_ratio,
    lepingle_report,
    load_experiment,
    load_report,
    make_weight,
    run_decomposition_report,
    sweep_r,
    tree_estimate_report,
)

EXIT_INTERNAL = 1
EXIT_CONFIG = 2
EXIT_BREACH = 3

Experiment = Callable[[ExperimentConfig, Optional[tqdm]], ExperimentReport]


def ratio_experiment(operator: Optional[str] = None) -> Experiment:
    def run(experiment: ExperimentConfig, progress: Optional[tqdm]) -> ExperimentReport:
        if operator is not None:
            experiment = experiment.with_overrides(operator=operator)
        return estimate_norm_ratio(experiment.operator,
                                   experiment.p,
                                   make_weight(experiment.weight, experiment.n),
                                   experiment.family,
                                   experiment.trials,
                                   experiment.seed,
                                   experiment.r,
                                   experiment.partial_n,
                                   config=experiment,
                                   progress=progress)

    return run


EXPERIMENTS: Dict[str, Experiment] = {
    "variation": ratio_experiment(),
    "carleson": ratio_experiment("truncation"),
    "apconst": apconst_report,
    "decompose": run_decomposition_report,
    "tree-estimate": tree_estimate_report,
    "lepingle": lepingle_report,
    "sweep-r": sweep_r,
}


def error(*args, **kwargs) -> None:
    kwargs["file"] = sys.stderr
    print(*args, **kwargs)


def load_configuration(config: Configuration) -> ExperimentConfig:
    """Experiment from the file given on the command line, or the defaults, with overrides."""
    experiment = (load_experiment(config.config_file)
                  if config.config_file is not None else ExperimentConfig())
    decomposition_dir = None if config.decomposition_dir is None else str(config.decomposition_dir)
    return experiment.with_overrides(seed=config.seed, save_decomposition=decomposition_dir)


def main(argv: Optional[Sequence[str]] = None) -> None:
    print(rf"""
                 _                     _       _    {__version__:>10}
  ___ __ _ _ __ | | ___  ___  ___  _ __ | | __ _| |__
 / __/ _` | '__|| |/ _ \/ __|/ _ \| '_ \| |/ _` | '_ \
| (_| (_| | |   | |  __/\__ \ (_) | | | | | (_| | |_) |
 \___\__,_|_|   |_|\___||___/\___/|_| |_|_|\__,_|_.__/
""")

    config = parse_args(argv)

    log_level = getattr(logging, config.log)
    logging.basicConfig(level=log_level, format="%(levelname)s: %(message)s")

    logger = logging.getLogger(__name__)

    try:
        if config.command == "report":
            report = load_report(config.report_file)
        else:
            experiment = load_configuration(config)
            logger.info(f"Running {config.command} with {experiment}")
            with tqdm(desc=f"{config.command:<24}", unit="trial",
                      disable=not config.progress) as progress:
                report = EXPERIMENTS[config.command](experiment, progress)
    except (ConfigError, FormatError, IncompatibleVersionError) as exception:
        logger.error(f"{exception}")
        sys.exit(EXIT_CONFIG)
    except:  # noqa: E722
        logger.exception(f"Internal error while running {config.command}.")
        sys.exit(EXIT_INTERNAL)

    report.save(config.out_dir, config.formats, config.cache_dir)
    print(report.render_summary(config.cache_dir))

    breaches = report.breaches()
    if breaches:
        if config.strict:
            error(f"{MonitorBreachError(breaches)}")
            sys.exit(EXIT_BREACH)
        logger.warning(f"{len(breaches)} monitors breached")


if __name__ == "__main__":
    main()
