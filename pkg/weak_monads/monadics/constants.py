"""
Constants for q-unital monads and their modules

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
    "assoc": "μ·Fμ = μ·μF",
    "unit-regular": "η is regular",
    "unit-symmetric": "η is symmetric",
    "mult-compatible": "μ:FF→F is compatible",
    "action": "ϱ·Fϱ = ϱ·μ_A",
    "module-compatible": "ϱ = ϱ·μ_A·Fη_A",
    "morphism-product": "μ'·hh = h·μ",
    "morphism-unit": "η' = h·η",
    "theta-idempotent": "ϑ·ϑ = ϑ",
    "theta-bar-idempotent": "ϑ̲·ϑ̲ = ϑ̲",
    "theta-fixes-unit": "ϑ·η = η",
    "theta-bar-fixes-unit": "ϑ̲·η = η",
    "mult-absorbs-theta": "μ·ϑϑ̲ = μ",
    "theta-product": "μ·ϑϑ = ϑ·μ",
    "theta-unit": "η = ϑ·η",
    "action-regular": "ϱ = ϱ·η_A·ϱ",
    "retraction-idempotent": "(ϱ·η_A)·(ϱ·η_A) = ϱ·η_A",
    "retraction-morphism": "ϱ·η_A·ϱ = ϱ·F(ϱ·η_A)",
    "unit-idempotent": "e·e = e",
    "unit-central": "e·a = a·e",
    "product-through-unit": "a·b = a·e·b",
    "oracle-alpha-regular": "α = α·β·α",
    "oracle-beta-regular": "β = β·α·β",
}
"""Flag name -> display label of the law it decides"""

# ------------------------------------------------------------------------------


#############
# EXCEPTION #
#############


class MonadicsException(Exception):
    """Base class for q-unital monad errors"""


class InvalidStructure(MonadicsException):
    """Raised when structure maps have the wrong shape or break associativity"""


class PreconditionViolated(MonadicsException):
    """Raised when a construction is applied outside its hypotheses"""

    def __init__(self, label: str):
        super().__init__(label)
        self.label = label
