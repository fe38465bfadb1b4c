"""
Sweedler-level reading of the comonad flags of a q-counital coalgebra

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
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

# Exact linear algebra
from ..linalg import LinMap, compose, identity, tensor

# Monadics
from ..monadics import DictionaryEntry

# Comonadics
from .coalgebra import QCounitalCoalgebra, law_report_co
from .constructions import delta_hat, delta_tilde

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("CoalgebraDictionary")


@dataclass(frozen=True)
class CoalgebraDictionaryReport:
    entries: Mapping[str, DictionaryEntry]
    """Sweedler criterion name -> pair of outcomes"""

    readings: Mapping[str, bool]
    """Both readings of the compatibility criterion"""

    compatible: bool
    """Categorical compatibility of δ"""

    constructions: Mapping[str, bool]

    @property
    def matching_readings(self) -> Tuple[str, ...]:
        return tuple(name for name, value in self.readings.items() if value == self.compatible)

    @property
    def consistent(self) -> bool:
        return all(entry.agrees for entry in self.entries.values()) and all(
            self.constructions.values()
        )


def _iterate(G: QCounitalCoalgebra, legs: int) -> LinMap:
    """Δ applied until the element is spread over the given number of legs"""
    spread = identity(G.ring, G.dim)
    for count in range(1, legs):
        spread = compose(tensor(identity(G.ring, G.dim ** (count - 1)), G.delta), spread)
    return spread


def _legs(G: QCounitalCoalgebra, pattern: str) -> LinMap:
    """Apply ε on the legs marked "e" and keep the ones marked "c" """
    I = identity(G.ring, G.dim)
    return tensor(*(G.eps if leg == "e" else I for leg in pattern))


def coalgebra_dictionary(G: QCounitalCoalgebra) -> CoalgebraDictionaryReport:
    """
    Pair every flag of the comonad law report with its Sweedler criterion.
    The compatibility criterion is evaluated with ε on the middle leg
    (Σ c1ε(c2) ⊗ c3, the one the law report decides) and on the last leg
    (Σ c1 ⊗ c2ε(c3)).

    :param G: coalgebra to read
    """
    report = law_report_co(G)
    two, three = _iterate(G, 2), _iterate(G, 3)

    entries = {
        "counit-multiplicative": DictionaryEntry(
            report.counit_regular, compose(_legs(G, "ee"), two) == G.eps
        ),
        "counit-balanced": DictionaryEntry(
            report.counit_symmetric,
            compose(_legs(G, "ce"), two) == compose(_legs(G, "ec"), two),
        ),
        "coproduct-middle-leg": DictionaryEntry(
            report.comult_compatible, compose(_legs(G, "cec"), three) == G.delta
        ),
    }
    readings = {
        "coproduct-middle-leg": entries["coproduct-middle-leg"].element,
        "coproduct-last-leg": compose(_legs(G, "cce"), three) == G.delta,
    }

    constructions: Dict[str, bool] = {}
    if report.counit_regular:
        tilde = delta_tilde(G)
        constructions["delta-tilde-sweedler"] = tilde.delta == compose(_legs(G, "cec"), three)
        constructions["delta-hat-sweedler"] = delta_hat(tilde).delta == compose(
            _legs(G, "ecece"), _iterate(G, 5)
        )

    dictionary = CoalgebraDictionaryReport(
        MappingProxyType(entries),
        MappingProxyType(readings),
        report.comult_compatible,
        MappingProxyType(constructions),
    )
    if not dictionary.consistent:
        logger.error(f"Sweedler criteria disagree with the law report on {G}")
    return dictionary
