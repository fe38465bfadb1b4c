"""
Constants of the mixed distributive law package

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
"""Largest compatible module and comodule carrier used by the batches"""

# ------------------------------------------------------------------------------


########
# LAWS #
########


LAWS = {
    "mon-rect": "Gμ·ωF·Fω = ω·μG",
    "mon-square-left": "ω·ϑG = ω",
    "mon-square-right": "Gϑ·ω = ω",
    "com-rect": "δF·ω = Gω·ωG·Fδ",
    "com-square-left": "ω·Fγ = ω",
    "com-square-right": "γF·ω = ω",
    "cond-ve": "ϑ·Fε = εF·ω",
    "eta-unit": "ω·ηG = Gη·γ",
    "counit-2": "μ·FεF·Fω·FηG = εF·ω",
    "unit-2": "GεF·Gω·GηG·δ = ω·ηG",
    "kappa-natural": "Gμ·κ̂F = κ̂·Gμ",
    "tau-natural": "τ̂G·Fδ = Fδ·τ̂",
    "xi-kappa": "μ·ξF = εF·κ̂",
    "xi-tau": "ξG·δ = τ̂·ηG",
    "kappa-idempotent": "κ̂·κ̂ = κ̂",
    "tau-idempotent": "τ̂·τ̂ = τ̂",
    "kappa-tau-commute": "κ̂·ω = ω·τ̂",
    "tau-mu": "μG·Fτ̂ = τ̂·μG",
    "tau-theta-gamma": "τ̂ = ϑγ",
    "kappa-delta": "Gκ̂·δF = δF·κ̂",
    "kappa-gamma-theta": "κ̂ = γϑ",
    "tau-unit-2": "τ̂ = μG·Fτ̂·FηG",
    "kappa-counit-2": "κ̂ = GεF·Gκ̂·δF",
    "lifted-action": "Ḡ(A) is an F-module",
    "lifted-action-compatible": "Ḡ(A) is a compatible F-module",
    "lifted-coaction": "F̂(B) is a G-comodule",
    "lifted-coaction-compatible": "F̂(B) is a compatible G-comodule",
    "coassoc": "Gδ·δ = δG·δ",
    "counit-regular": "ε = ε·γ",
    "counit-symmetric": "γ = γ̲",
    "comult-compatible": "δ = GεG·δG·δ",
    "assoc": "μ·Fμ = μ·μF",
    "unit-regular": "η = ϑ·η",
    "unit-symmetric": "ϑ = ϑ̲",
    "mult-compatible": "μ = μ·μF·FηF",
    "coproduct-morphism": "δ_A is an F-module morphism",
    "counit-morphism": "ε_A is an F-module morphism",
    "product-comorphism": "μ_B is a G-comodule morphism",
    "unit-comorphism": "η_B is a G-comodule morphism",
    "eps-bar-morphism": "ε̄_A = φ·ξ_A is an F-module morphism",
    "eta-hat-comorphism": "η̂_B = ξ_B·υ is a G-comodule morphism",
    "pre-counit-free": "εF is an F-morphism",
    "pre-unit-free": "ηG is G-colinear",
    "delta-bar-alternative": "Gκ̂·δF = δF·κ̂ on modules",
    "mu-mixed-alternative": "μG·Fτ̂ = τ̂·μG on comodules",
}
"""Flag name -> display label of the law it decides"""

REPORT_FLAGS = (
    "mon_rect",
    "mon_square",
    "com_rect",
    "com_square",
    "cond_ve",
    "eta_unit",
    "counit_2",
    "unit_2",
)
"""Flags of a mixed report, in display order"""

# ------------------------------------------------------------------------------


#############
# EXCEPTION #
#############


class MixedException(Exception):
    """Base class for mixed distributive law errors"""


class InvalidMixedLaw(MixedException):
    """Raised when ω does not fit a weak monad and a weak comonad"""


class PreconditionViolated(MixedException):
    """Raised when a lifting is requested while a required diagram fails"""

    def __init__(self, label: str):
        super().__init__(label)
        self.label = label
