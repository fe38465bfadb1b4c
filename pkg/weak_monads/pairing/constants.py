"""
Pairing constants

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

# settings
from ..settings import config

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


##########
# ORACLE #
##########


ORACLE_DIMS = config.getint("ORACLE", "DIMS", fallback=2)
"""Largest test objects R^d used by the hom-set oracle and the comparison checks"""

SCAN_SEED = config.getint("SCAN", "SEED", fallback=2021)
"""Default seed of the seeded pairing searches"""

# ------------------------------------------------------------------------------


########
# LAWS #
########


LAWS = {
    "alpha-regular": "α·β·α = α",
    "beta-regular": "β·α·β = β",
    "alpha-symmetric": "ϑ = ϑ̲",
    "beta-symmetric": "γ = γ̲",
    "semiadjoint": "α·β = I",
    "adjunction": "α·β = I and β·α = I",
    "mult-theta": "RεL·RLϑ = ϑ·RεL",
    "mult-theta-bar": "RεL·ϑ̲RL = ϑ̲·RεL",
    "theta-commute": "ϑ̲·ϑ = ϑ·ϑ̲",
    "comult-gamma": "LRγ·LηR = LηR·γ",
    "comult-gamma-bar": "γ̲LR·LηR = LηR·γ̲",
    "gamma-commute": "γ̲·γ = γ·γ̲",
    "h-idempotent": "β·α(I_L) is idempotent",
    "k-idempotent": "α·β(I_R) is idempotent",
    "theta-idempotent": "ϑ·ϑ = ϑ",
    "theta-bar-idempotent": "ϑ̲·ϑ̲ = ϑ̲",
    "theta-fixes-unit": "ϑ·η = η",
    "theta-bar-fixes-unit": "ϑ̲·η = η",
    "gamma-idempotent": "γ·γ = γ",
    "gamma-bar-idempotent": "γ̲·γ̲ = γ̲",
    "counit-fixes-gamma": "ε·γ = ε",
    "counit-fixes-gamma-bar": "ε·γ̲ = ε",
    "hatR-lands-compatible": "Rε: RLR(B) → R(B) is a compatible RL-module",
    "hatL-lands-compatible": "Lη: L(A) → LRL(A) is a compatible LR-comodule",
    "triangle-left": "R̂·L = φ_RL",
    "triangle-right": "U_RL·R̂ = R",
    "co-triangle-left": "L̃·R = φ^LR",
    "co-triangle-right": "U^LR·L̃ = L",
    "alpha-symmetry-diagram": "R̂·β·α = β_RL·α_RL·R̂",
    "beta-symmetry-diagram": "L̃·α·β = α^LR·β^LR·L̃",
}
"""Flag name -> display label of the law it decides"""

# ------------------------------------------------------------------------------


#############
# EXCEPTION #
#############


class PairingException(Exception):
    """Base class for pairing errors"""


class HomShapeMismatch(PairingException):
    """Raised when a morphism does not have the hom-set shape of the transposition"""


class PreconditionViolated(PairingException):
    """Raised when a construction is applied outside its hypotheses"""

    def __init__(self, label: str):
        super().__init__(label)
        self.label = label
