"""
Element-level reading of the monad flags of a q-unital algebra

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
from itertools import product
from types import MappingProxyType
from typing import Dict, Mapping

# Exact linear algebra
from ..linalg import LinMap, basis_vector

# Monadics
from .algebra import QUnitalAlgebra, law_report
from .constructions import mu_hat, mu_tilde

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("AlgebraDictionary")


@dataclass(frozen=True)
class DictionaryEntry:
    categorical: bool
    """Flag decided on the 2-cell level"""

    element: bool
    """Criterion decided on basis elements"""

    @property
    def agrees(self) -> bool:
        return self.categorical == self.element


@dataclass(frozen=True)
class DictionaryReport:
    entries: Mapping[str, DictionaryEntry]
    """Element criterion name -> pair of outcomes"""

    constructions: Mapping[str, bool]
    """Closed element formulas of the repair constructions, when defined"""

    @property
    def consistent(self) -> bool:
        return all(entry.agrees for entry in self.entries.values()) and all(
            self.constructions.values()
        )


def _basis(F: QUnitalAlgebra):
    return [basis_vector(F.ring, F.dim, index) for index in range(F.dim)]


def algebra_dictionary(F: QUnitalAlgebra) -> DictionaryReport:
    """
    Pair every flag of the law report with its criterion on elements:
    e·e = e, e central, a·b = a·e·b. When e is idempotent also compare
    μ̃ and μ̂ with a⊗b ↦ a·e·b and a⊗b ↦ e·a·e·b·e.

    :param F: algebra to read
    :return: paired outcomes
    """
    report = law_report(F)
    e: LinMap = F.u
    basis = _basis(F)
    pairs = list(product(basis, repeat=2))

    def aeb(a: LinMap, b: LinMap) -> LinMap:
        return F.product(F.product(a, e), b)

    entries = {
        "unit-idempotent": DictionaryEntry(
            report.unit_regular, F.product(e, e) == e
        ),
        "unit-central": DictionaryEntry(
            report.unit_symmetric,
            all(F.product(e, a) == F.product(a, e) for a in basis),
        ),
        "product-through-unit": DictionaryEntry(
            report.mult_compatible,
            all(F.product(a, b) == aeb(a, b) for a, b in pairs),
        ),
    }

    constructions: Dict[str, bool] = {}
    if report.unit_regular:
        tilde = mu_tilde(F)
        constructions["mu-tilde-aeb"] = all(
            tilde.product(a, b) == aeb(a, b) for a, b in pairs
        )
        hat = mu_hat(tilde)
        constructions["mu-hat-eaebe"] = all(
            hat.product(a, b) == F.product(F.product(e, aeb(a, b)), e)
            for a, b in pairs
        )

    dictionary = DictionaryReport(MappingProxyType(entries), MappingProxyType(constructions))
    if not dictionary.consistent:
        logger.error(f"element criteria disagree with the law report on {F}")
    return dictionary
