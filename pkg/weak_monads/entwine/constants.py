"""
Constants of the entwining package

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
"""Largest module and comodule carrier used by the lifting batches"""

# ------------------------------------------------------------------------------


########
# LAWS #
########


LAWS = {
    "lift-equ": "Tμ·λF·LTϑ·Lλ = Tϑ·λ·μ'T",
    "lift-equ-reg": "Tϑ·λ·ϑ'T = Tϑ·λ",
    "lift-rect": "Tμ·λF·Lλ = λ·μ'T",
    "lift-left-triangle": "λ·ϑ'T = λ",
    "lift-right-triangle": "Tϑ·λ = λ",
    "f-reg": "Tφ·λ_A = Tφ·λ_A·LTφ·LTη_A",
    "lift-equ-co": "δ'T·ψ·Tγ = Hψ·HTγ·ψG·Tδ",
    "lift-equ-reg-co": "γ'T·ψ·Tγ = ψ·Tγ",
    "colift-rect": "δ'T·ψ = Hψ·ψG·Tδ",
    "colift-left-triangle": "ψ·Tγ = ψ",
    "colift-right-triangle": "γ'T·ψ = ψ",
    "f-reg-co": "ψ·Tυ = HTε·HTυ·ψ·Tυ",
    "functor-action": "ϱ·Lϱ = ϱ·μ'TF",
    "functor-action-compatible": "ϱ = ϱ·μ'TF·Lη'TF",
    "functor-action-natural": "ϱ·LTμ = Tμ·ϱF",
    "functor-coaction": "Hυ·υ = δ'TG·υ",
    "functor-coaction-compatible": "υ = Hε'TG·δ'TG·υ",
    "functor-coaction-natural": "HTδ·υ = υG·Tδ",
    "end-rect": "Tμ·λF·Fλ = λ·μT",
    "end-left-triangle": "λ·ϑT = λ",
    "end-right-triangle": "Tϑ·λ = λ",
    "q-mon-rect": "μ̌F·Tλ·λT = λ·Fμ̌",
    "q-mon-left-triangle": "λ·Fϑ̌ = λ",
    "q-mon-right-triangle": "ϑ̌F·λ = λ",
    "end-co-rect": "δT·ψ = Gψ·ψG·Tδ",
    "end-co-left-triangle": "ψ·Tγ = ψ",
    "end-co-right-triangle": "γT·ψ = ψ",
    "comon-rect": "Gδ̌·ψ = ψT·Tψ·δ̌G",
    "comon-left-triangle": "ψ·γ̌G = ψ",
    "comon-right-triangle": "Gγ̌·ψ = ψ",
}
"""Flag name -> display label of the law it decides"""

# ------------------------------------------------------------------------------


#############
# EXCEPTION #
#############


class EntwineException(Exception):
    """Base class for entwining errors"""


class InvalidEntwining(EntwineException):
    """Raised when λ or ψ does not fit the carriers of its (co)monads"""


class PreconditionViolated(EntwineException):
    """Raised when a lifting or a construction is applied outside its hypotheses"""

    def __init__(self, label: str):
        super().__init__(label)
        self.label = label
