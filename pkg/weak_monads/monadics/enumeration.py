"""
Exhaustive families of q-unital algebras and of their compatible modules

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

# Monadics
from .algebra import AlgebraModule, QUnitalAlgebra, is_associative, module_report

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("MonadEnumeration")


def enumerate_algebras(dim: int, ring: ExactRing, cap: int = None) -> Iterator[QUnitalAlgebra]:
    """
    Every associative product on R^dim crossed with every quasi-unit,
    products in map order, quasi-units in map order within a product

    :param dim: carrier dimension
    :param ring: a Z_n ring
    :param cap: enumeration cap, the configured one when None
    :raise EnumerationCapExceeded: when n^(dim³+dim) exceeds the cap
    """
    check_cap(count_maps(dim * dim + 1, dim, ring), cap)
    logger.debug(f"scanning products of dimension {dim} over {ring}")
    for m in enumerate_maps(dim * dim, dim, ring, cap):
        if not is_associative(ring, dim, m):
            continue
        for u in enumerate_maps(1, dim, ring, cap):
            yield QUnitalAlgebra(ring, dim, m, u)


def enumerate_compatible_modules(
    F: QUnitalAlgebra, dim_bound: int, cap: int = None
) -> List[AlgebraModule]:
    """
    Every action satisfying the action law and compatibility on the
    carriers R^0 … R^dim_bound

    :param F: algebra acting
    :param dim_bound: largest module dimension
    :param cap: enumeration cap, the configured one when None
    :raise EnumerationCapExceeded: when the actions to scan exceed the cap
    """
    check_cap(sum(count_maps(F.dim * k, k, F.ring) for k in range(dim_bound + 1)), cap)
    modules = []
    for k in range(dim_bound + 1):
        for rho in enumerate_maps(F.dim * k, k, F.ring, cap):
            module = AlgebraModule(F, k, rho)
            report = module_report(module)
            if report.action_ok and report.compatible:
                modules.append(module)
    logger.debug(f"{len(modules)} compatible modules up to dimension {dim_bound}")
    return modules
