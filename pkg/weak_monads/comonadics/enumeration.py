"""
Exhaustive families of q-counital coalgebras and of their compatible comodules

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
from typing import Iterator, List

# Exact linear algebra
from ..linalg import ExactRing, check_cap, count_maps, enumerate_maps

# Comonadics
from .coalgebra import CoalgebraComodule, QCounitalCoalgebra, comodule_report, is_coassociative

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("ComonadEnumeration")


def enumerate_coalgebras(
    dim: int, ring: ExactRing, cap: int = None
) -> Iterator[QCounitalCoalgebra]:
    """
    Every coassociative coproduct on R^dim crossed with every quasi-counit

    :raise EnumerationCapExceeded: when n^(dim³+dim) exceeds the cap
    """
    check_cap(count_maps(dim, dim * dim + 1, ring), cap)
    for delta in enumerate_maps(dim, dim * dim, ring, cap):
        if not is_coassociative(ring, dim, delta):
            continue
        for eps in enumerate_maps(dim, 1, ring, cap):
            yield QCounitalCoalgebra(ring, dim, delta, eps)


def enumerate_compatible_comodules(
    G: QCounitalCoalgebra, dim_bound: int, cap: int = None
) -> List[CoalgebraComodule]:
    """
    Every coaction satisfying the coaction law and compatibility on the
    carriers R^0 … R^dim_bound

    :raise EnumerationCapExceeded: when the coactions to scan exceed the cap
    """
    check_cap(sum(count_maps(k, G.dim * k, G.ring) for k in range(dim_bound + 1)), cap)
    comodules = []
    for k in range(dim_bound + 1):
        for upsilon in enumerate_maps(k, G.dim * k, G.ring, cap):
            comodule = CoalgebraComodule(G, k, upsilon)
            report = comodule_report(comodule)
            if report.coaction_ok and report.compatible:
                comodules.append(comodule)
    logger.debug(f"{len(comodules)} compatible comodules up to dimension {dim_bound}")
    return comodules
