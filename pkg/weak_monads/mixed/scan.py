"""
Exhaustive scans over mixed distributive laws

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
from typing import Dict, List, Sequence, Tuple

# Third Party
from bitarray import bitarray

# Exact linear algebra
from ..linalg import LinMap, check_cap, count_maps, enumerate_maps

# Diagram
from ..diagram import vert

# Monadics and comonadics
from ..comonadics import QCounitalCoalgebra
from ..monadics import QUnitalAlgebra

# Mixed
from .distributive import MixedDistributiveLaw, kappa_cell, mixed_equations, tau_cell

# Utilities
from ..utilities import ScanRunner, WeakLogger, implies, set_indices

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("MixedScan")

SCAN_FLAGS = (
    "mon_rect",
    "mon_square",
    "com_rect",
    "com_square",
    "cond_ve",
    "eta_unit",
    "counit_2",
    "unit_2",
    "kappa_idempotent",
    "tau_idempotent",
    "kappa_tau_commute",
)
"""Mask names of a mixed scan"""

IMPLICATIONS = (
    ("cond_ve", "counit_2"),
    ("eta_unit", "unit_2"),
    ("mon_rect", "kappa_idempotent"),
    ("com_rect", "tau_idempotent"),
)
"""Flag implications checked over every scanned ω"""


@dataclass(frozen=True)
class MixedScan:
    F: QUnitalAlgebra
    G: QCounitalCoalgebra
    candidates: int
    masks: Dict[str, bitarray]
    implications: Dict[str, bool]
    """"premise => conclusion" -> holds on every candidate"""

    def matching(self, names: Sequence[str]) -> List[int]:
        """Candidates on which every named flag holds"""
        mask = bitarray(self.candidates, endian="little")
        mask.setall(True)
        for name in names:
            mask &= self.masks[name]
        return set_indices(mask)

    def candidate(self, index: int) -> MixedDistributiveLaw:
        size = self.F.dim * self.G.dim
        omega = next(islice(enumerate_maps(size, size, self.F.ring), index, None))
        return MixedDistributiveLaw(self.F, self.G, omega)


def mixed_scan(
    F: QUnitalAlgebra, G: QCounitalCoalgebra, cap: int = None, runner: ScanRunner = None
) -> MixedScan:
    """
    Evaluate every ω: FG → GF over a finite ring

    :param F: weak monad
    :param G: weak comonad
    :param cap: enumeration cap
    :param runner: scan runner, a default one when omitted
    :raise InvalidMixedLaw: when F or G is not weak
    """
    size = F.dim * G.dim
    check_cap(count_maps(size, size, F.ring), cap)
    # raises on non-weak F or G before the scan starts
    MixedDistributiveLaw(F, G, next(enumerate_maps(size, size, F.ring, cap)))
    base = G.register(F.signature(), "G", "delta", "eps")

    def evaluate(omega: LinMap) -> Tuple[bool, ...]:
        sig = base.extend({}, [("omega", "F G", "G F", omega)])
        results = mixed_equations(sig)
        kappa, tau = kappa_cell(sig), tau_cell(sig)
        omega_cell = sig.gen("omega")
        return (
            results["mon-rect"].holds,
            results["mon-square-left"].holds and results["mon-square-right"].holds,
            results["com-rect"].holds,
            results["com-square-left"].holds and results["com-square-right"].holds,
            results["cond-ve"].holds,
            results["eta-unit"].holds,
            results["counit-2"].holds,
            results["unit-2"].holds,
            sig.check_equation(vert(kappa, kappa), kappa).holds,
            sig.check_equation(vert(tau, tau), tau).holds,
            sig.check_equation(vert(kappa, omega_cell), vert(omega_cell, tau)).holds,
        )

    runner = runner or ScanRunner()
    masks = runner.run_scan(enumerate_maps(size, size, F.ring, cap), evaluate, SCAN_FLAGS)
    implications = {
        f"{premise} => {conclusion}": implies(masks[premise], masks[conclusion])
        for premise, conclusion in IMPLICATIONS
    }
    for name, holds in implications.items():
        if not holds:
            logger.warning(f"implication {name} fails on some candidate")
    return MixedScan(F, G, len(masks[SCAN_FLAGS[0]]), masks, implications)
