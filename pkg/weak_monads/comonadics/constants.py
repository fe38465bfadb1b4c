"""
Comonadics constants

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
"""Largest test object R^d used by the hom-set oracles"""

# ------------------------------------------------------------------------------


########
# LAWS #
########


LAWS = {
    "coassoc": "Gδ·δ = δG·δ",
    "counit-regular": "ε is regular",
    "counit-symmetric": "ε is symmetric",
    "comult-compatible": "δ:G→GG is compatible",
    "coaction": "Gυ·υ = δ_B·υ",
    "comodule-compatible": "υ = Gε_B·δ_B·υ",
    "morphism-coproduct": "hh·δ = δ'·h",
    "morphism-counit": "ε = ε'·h",
    "gamma-idempotent": "γ·γ = γ",
    "gamma-bar-idempotent": "γ̲·γ̲ = γ̲",
    "counit-fixes-gamma": "ε·γ = ε",
    "counit-fixes-gamma-bar": "ε·γ̲ = ε",
    "comult-absorbs-gamma": "γγ̲·δ = δ",
    "gamma-coproduct": "γγ·δ = δ·γ",
    "gamma-counit": "ε = ε·γ",
    "coaction-regular": "υ = υ·ε_B·υ",
    "section-idempotent": "(ε_B·υ)·(ε_B·υ) = ε_B·υ",
    "section-morphism": "υ·ε_B·υ = G(ε_B·υ)·υ",
    "counit-multiplicative": "ε(c) = Σ ε(c1)ε(c2)",
    "counit-balanced": "Σ c1ε(c2) = Σ ε(c1)c2",
    "coproduct-middle-leg": "Δ(c) = Σ c1ε(c2) ⊗ c3",
    "coproduct-last-leg": "Δ(c) = Σ c1 ⊗ c2ε(c3)",
    "weak-coring": "Σ ε(c1)c2 = 1_A·c = Σ c1ε(c2)",
    "pre-coring": "c = Σ ε(c1)c2, 1_A·c = Σ c1ε(c2)",
    "unitality-of-delta": "1_A·Δ(c) = Δ(c)",
    "restricted-coring": "(A𝒞, Δ, ε) is an A-coring",
}
"""Flag name -> display label of the law it decides"""

# ------------------------------------------------------------------------------


#############
# EXCEPTION #
#############


class ComonadicsException(Exception):
    """Base class for q-counital comonad errors"""


class InvalidStructure(ComonadicsException):
    """Raised when structure maps have the wrong shape or break coassociativity"""


class PreconditionViolated(ComonadicsException):
    """Raised when a construction is applied outside its hypotheses"""

    def __init__(self, label: str):
        super().__init__(label)
        self.label = label
