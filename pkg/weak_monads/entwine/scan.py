"""
Exhaustive scans of the entwined (co)product equivalence

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
from dataclasses import dataclass
from itertools import islice
from typing import Dict, List, Optional, Union

# Third Party
from bitarray import bitarray

# Exact linear algebra
from ..linalg import LinMap, check_cap, count_maps, enumerate_maps

# Monadics and comonadics
from ..comonadics import QCounitalCoalgebra
from ..monadics import QUnitalAlgebra

# Entwining
from .product import entwined_coproduct, entwined_product

# Utilities
from ..utilities import ScanRunner, WeakLogger, implies, set_indices

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("EquivalenceScan")

SCAN_FLAGS = ("weak", "diagrams")
"""Mask names: the structure is weak, every diagram commutes"""


@dataclass(frozen=True)
class EquivalenceScan:
    candidates: int
    masks: Dict[str, bitarray]
    diagrams_imply_weak: bool
    weak_implies_diagrams: bool
    counterexample: Optional[LinMap] = None
    """First candidate giving a weak structure without the diagrams commuting"""

    @property
    def equivalent(self) -> bool:
        return self.diagrams_imply_weak and self.weak_implies_diagrams

    def indices(self, name: str) -> List[int]:
        return set_indices(self.masks[name])


def equivalence_scan(
    first: Union[QUnitalAlgebra, QCounitalCoalgebra],
    second: Union[QUnitalAlgebra, QCounitalCoalgebra],
    cap: int = None,
    runner: ScanRunner = None,
) -> EquivalenceScan:
    """
    Evaluate every λ: FT → TF (or ψ: TG → GT) and compare the weakness of
    the entwined structure with the commutativity of the diagrams

    :param first: F (resp. G), weak
    :param second: T, weak, of the same kind
    :param cap: enumeration cap
    :param runner: scan runner, a default one when omitted
    :return: masks over the candidates in enumeration order and both implications
    """
    ring = first.ring
    size = first.dim * second.dim
    check_cap(count_maps(size, size, ring), cap)

    if isinstance(first, QUnitalAlgebra):

        def evaluate(candidate: LinMap):
            product = entwined_product(first, second, candidate)
            return product.weak, product.diagrams

    else:

        def evaluate(candidate: LinMap):
            coproduct = entwined_coproduct(first, second, candidate)
            return coproduct.weak, coproduct.diagrams

    runner = runner or ScanRunner()
    masks = runner.run_scan(enumerate_maps(size, size, ring, cap), evaluate, SCAN_FLAGS)

    split = masks["weak"] & ~masks["diagrams"]
    counterexample = None
    if split.any():
        index = split.index(1)
        counterexample = next(islice(enumerate_maps(size, size, ring, cap), index, None))
        logger.info(f"candidate {index} is weak while a diagram fails")

    return EquivalenceScan(
        candidates=len(masks["weak"]),
        masks=masks,
        diagrams_imply_weak=implies(masks["diagrams"], masks["weak"]),
        weak_implies_diagrams=implies(masks["weak"], masks["diagrams"]),
        counterexample=counterexample,
    )
