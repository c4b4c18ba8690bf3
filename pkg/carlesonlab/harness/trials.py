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
"""Parallel execution of independent trials."""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, List, Optional, Sequence, Tuple

from tqdm import tqdm

logger = logging.getLogger(__name__)


async def _gather(function: Callable[..., Any], arguments: Sequence[Tuple[Any, ...]],
                  workers: Optional[int], progress: Optional[tqdm]) -> List[Any]:
    if progress is not None:
        progress.total = (progress.total or 0) + len(arguments)

        async def _progress_report(future):
            ret = await future
            progress.update()
            return ret
    else:

        async def _progress_report(future):
            return await future

    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=workers) as executor:
        jobs = [
            _progress_report(loop.run_in_executor(executor, function, *args))
            for args in arguments
        ]
        return await asyncio.gather(*jobs)


def run_trials(function: Callable[..., Any],
               arguments: Sequence[Tuple[Any, ...]],
               progress: Optional[tqdm] = None,
               workers: Optional[int] = None) -> List[Any]:
    """Call `function(*args)` for every entry of `arguments` on a worker pool.

    Results come back in the order of `arguments`.
    """
    logger.debug(f"Running {len(arguments)} trials of {getattr(function, '__name__', function)}")
    return asyncio.run(_gather(function, arguments, workers, progress))
