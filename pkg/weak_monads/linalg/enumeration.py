"""
Exhaustive enumeration of maps over Z_n

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
from itertools import product
from typing import Iterator

# Third Party
import numpy as np

# Exact linear algebra
from .constants import ENUMERATION_CAP, EnumerationCapExceeded, InvalidRing
from .linmap import LinMap
from .ring import ExactRing

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


def check_cap(required: int, cap: int = None) -> None:
    """
    Refuse an enumeration larger than the cap

    :param required: number of candidates the enumeration would yield
    :param cap: explicit cap, the configured one when None
    :raise EnumerationCapExceeded: when required > cap
    """
    cap = ENUMERATION_CAP if cap is None else cap
    if required > cap:
        raise EnumerationCapExceeded(required, cap)


def count_maps(from_dim: int, to_dim: int, ring: ExactRing) -> int:
    """Number of maps R^from_dim → R^to_dim over a finite ring"""
    if ring.modulus is None:
        raise InvalidRing("maps can only be enumerated over Z_n")
    return ring.modulus ** (from_dim * to_dim)


def enumerate_maps(
    from_dim: int, to_dim: int, ring: ExactRing, cap: int = None
) -> Iterator[LinMap]:
    """
    Every map R^from_dim → R^to_dim exactly once, lexicographic on the
    row-major entry vector (the zero map first)

    The cap is checked when the iterator is built, before any map is yielded.

    :param from_dim: dimension of the domain
    :param to_dim: dimension of the codomain
    :param ring: a Z_n ring
    :param cap: enumeration cap, the configured one when None
    :raise EnumerationCapExceeded: when n^(from·to) exceeds the cap
    """
    check_cap(count_maps(from_dim, to_dim, ring), cap)
    return _maps(from_dim, to_dim, ring)


def _maps(from_dim: int, to_dim: int, ring: ExactRing) -> Iterator[LinMap]:
    shape = (to_dim, from_dim)
    for entries in product(range(ring.modulus), repeat=from_dim * to_dim):
        yield LinMap(ring, np.array(entries, dtype=np.int64).reshape(shape))
