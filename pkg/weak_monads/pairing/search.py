"""
Exhaustive and seeded families of dual pairings

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
from typing import Iterator

# Third Party
import numpy as np

# Exact linear algebra
from ..linalg import ExactRing, LinMap, check_cap, count_maps, enumerate_maps

# Pairing
from .constants import SCAN_SEED
from .dual_pairing import DualPairing

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


def enumerate_pairings(
    ring: ExactRing, a: int, b: int, cap: int = None
) -> Iterator[DualPairing]:
    """
    Every (η, ε) pair with the given carriers, quasi-units in map order

    :raise EnumerationCapExceeded: when n^(2ab) exceeds the cap
    """
    check_cap(count_maps(1, 2 * a * b, ring), cap)
    for eta in enumerate_maps(1, b * a, ring, cap):
        for eps in enumerate_maps(a * b, 1, ring, cap):
            yield DualPairing(ring, a, b, eta, eps)


def sample_pairings(
    ring: ExactRing, a: int, b: int, count: int, seed: int = SCAN_SEED
) -> Iterator[DualPairing]:
    """
    Reproducible random pairings over Z_n

    :param count: number of pairings to draw
    :param seed: generator seed
    """
    generator = np.random.default_rng(seed)
    for _ in range(count):
        eta = generator.integers(0, ring.modulus, size=(b * a, 1))
        eps = generator.integers(0, ring.modulus, size=(1, a * b))
        yield DualPairing(ring, a, b, LinMap(ring, eta), LinMap(ring, eps))
