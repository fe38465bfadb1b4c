"""
Utility methods for Weak Monads

:author: Angelo Cutaia
:copyright: Copyright 2021, LINKS Foundation
:version: 1.0.0

..

    Copyright 2021 LINKS Foundation

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
"""

# Standard library
import asyncio
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
import logging
from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple, TypeVar

# Third Party
from bitarray import bitarray
import uvloop

# settings
from .settings import config

# ------------------------------------------------------------------------------


# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"


# ------------------------------------------------------------------------------


T = TypeVar("T")

SCAN_WORKERS = config.getint("SCAN", "WORKERS", fallback=4)
"""Number of threads evaluating scan chunks"""

SCAN_CHUNK = config.getint("SCAN", "CHUNK", fallback=4096)
"""Number of candidates evaluated by a single worker call"""

LOG_LEVEL = config.get("LOGGING", "LEVEL", fallback="INFO")
"""Level of every package logger"""


# ------------------------------------------------------------------------------


##########
# LOGGER #
##########


class WeakLogger:
    """
    Class that handles the loggers of the package
    """

    @staticmethod
    def get_logger(name: str) -> logging.Logger:
        """
        Get a logger with the package format

        :param name: Name of the logger
        :return: Logger
        """
        logger = logging.getLogger(name)
        logger.setLevel(getattr(logging, LOG_LEVEL.upper(), logging.INFO))

        # Attach the handler only once
        if not logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(
                logging.Formatter("%(levelname)s : [%(name)s] : %(message)s")
            )
            logger.addHandler(handler)
            logger.propagate = False

        return logger


# ------------------------------------------------------------------------------


#############
# SCAN MASK #
#############


def implies(antecedent: bitarray, consequent: bitarray) -> bool:
    """
    Check that every candidate set in the first mask is set in the second one

    :param antecedent: mask of the premise
    :param consequent: mask of the conclusion
    :return: True when the implication holds on every candidate
    """
    return not (antecedent & ~consequent).any()


def set_indices(mask: bitarray) -> List[int]:
    """
    Positions of the candidates selected by a mask

    :param mask: scan mask
    :return: sorted candidate indices
    """
    return [index for index, bit in enumerate(mask) if bit]


def chunked(candidates: Iterable[T], size: int) -> Iterator[List[T]]:
    """
    Split a candidate stream into ordered chunks

    :param candidates: stream to split
    :param size: maximum chunk length
    """
    iterator = iter(candidates)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


# ------------------------------------------------------------------------------


###############
# SCAN RUNNER #
###############


class ScanRunner:
    """
    Evaluate a predicate family over a candidate stream, fanning the chunks
    out to a thread pool and merging the outcomes in stream order
    """

    logger: logging.Logger = WeakLogger.get_logger("ScanRunner")
    executor: ThreadPoolExecutor = ThreadPoolExecutor(max_workers=SCAN_WORKERS)

    def __init__(self, chunk: int = SCAN_CHUNK) -> None:
        """
        :param chunk: number of candidates evaluated by a single worker call
        """
        self.chunk = chunk

    @staticmethod
    def _evaluate_chunk(
        chunk: List[T], evaluate: Callable[[T], Tuple[bool, ...]], width: int
    ) -> List[bitarray]:
        """
        Evaluate every candidate of a chunk, one mask per predicate
        """
        masks = [bitarray(endian="little") for _ in range(width)]
        for candidate in chunk:
            outcome = evaluate(candidate)
            for mask, bit in zip(masks, outcome):
                mask.append(bool(bit))
        return masks

    async def scan(
        self,
        candidates: Iterable[T],
        evaluate: Callable[[T], Tuple[bool, ...]],
        names: Sequence[str],
    ) -> Dict[str, bitarray]:
        """
        Evaluate the predicates on every candidate

        :param candidates: ordered candidate stream
        :param evaluate: function returning one boolean per predicate name
        :param names: predicate names, in the order returned by evaluate
        :return: one mask per predicate, bit i describing candidate i
        """
        loop = asyncio.get_running_loop()
        width = len(names)

        futures = [
            loop.run_in_executor(
                self.executor, self._evaluate_chunk, chunk, evaluate, width
            )
            for chunk in chunked(candidates, self.chunk)
        ]
        # gather keeps the submission order, so the merge is deterministic
        parts = await asyncio.gather(*futures)

        masks = {name: bitarray(endian="little") for name in names}
        for part in parts:
            for name, mask in zip(names, part):
                masks[name].extend(mask)

        self.logger.info(
            f"scanned {len(masks[names[0]]) if names else 0} candidates in {len(parts)} chunks"
        )
        return masks

    def run_scan(
        self,
        candidates: Iterable[T],
        evaluate: Callable[[T], Tuple[bool, ...]],
        names: Sequence[str],
    ) -> Dict[str, bitarray]:
        """
        Synchronous counterpart of scan, running on a private uvloop event loop
        """
        loop = uvloop.new_event_loop()
        try:
            return loop.run_until_complete(self.scan(candidates, evaluate, names))
        finally:
            loop.close()
