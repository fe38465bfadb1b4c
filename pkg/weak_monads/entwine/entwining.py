"""
Entwinings of a functor with a pair of monads or comonads

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
from dataclasses import dataclass, replace
from typing import Union

# Exact linear algebra
from ..linalg import LinMap

# Diagram
from ..diagram import Signature, vert

# Monadics and comonadics
from ..comonadics import QCounitalCoalgebra, gamma_cell
from ..monadics import QUnitalAlgebra, theta_cell

# Constants
from .constants import InvalidEntwining

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


####################
# MODULE ENTWINING #
####################


@dataclass(frozen=True)
class ModuleEntwining:
    """
    λ: LT → TF for the functor T = R^t⊗– between the monads of F (source
    side) and L (target side)
    """

    L: QUnitalAlgebra
    """Monad acting on the lifted modules"""

    F: QUnitalAlgebra
    """Monad of the modules to lift"""

    t: int
    """Carrier dimension of T"""

    lam: LinMap
    """λ as a (t·f)×(l·t) map"""

    def __post_init__(self):
        if self.L.ring != self.F.ring or self.lam.ring != self.F.ring:
            raise InvalidEntwining("L, F and λ must share one ring")
        expected = (self.t * self.F.dim, self.L.dim * self.t)
        if self.lam.shape != expected:
            raise InvalidEntwining(f"λ must be {expected[0]}x{expected[1]}")

    def signature(self) -> Signature:
        """
        Letters F, L, T with μ, η (F), μ', η' (named muL, etaL) and λ (lam)
        """
        sig = self.L.register(self.F.signature(), "L", "muL", "etaL")
        return sig.extend({"T": self.t}, [("lam", "L T", "T F", self.lam)])


######################
# COMODULE ENTWINING #
######################


@dataclass(frozen=True)
class ComoduleEntwining:
    """
    ψ: TG → HT for the functor T = R^t⊗– between the comonads of G (source
    side) and H (target side)
    """

    G: QCounitalCoalgebra
    """Comonad of the comodules to lift"""

    H: QCounitalCoalgebra
    """Comonad coacting on the lifted comodules"""

    t: int
    psi: LinMap
    """ψ as a (h·t)×(t·g) map"""

    def __post_init__(self):
        if self.G.ring != self.H.ring or self.psi.ring != self.G.ring:
            raise InvalidEntwining("G, H and ψ must share one ring")
        expected = (self.H.dim * self.t, self.t * self.G.dim)
        if self.psi.shape != expected:
            raise InvalidEntwining(f"ψ must be {expected[0]}x{expected[1]}")

    def signature(self) -> Signature:
        """
        Letters G, H, T with δ, ε (G), δ', ε' (named deltaH, epsH) and ψ (psi)
        """
        sig = self.H.register(self.G.signature(), "H", "deltaH", "epsH")
        return sig.extend({"T": self.t}, [("psi", "T G", "H T", self.psi)])


Entwining = Union[ModuleEntwining, ComoduleEntwining]

# ------------------------------------------------------------------------------


###########################
# INDUCED ACTION/COACTION #
###########################


def chi(E: ModuleEntwining) -> LinMap:
    """
    The L-action induced on TF by the free module (F, μ),
    χ = Tμ·λF: LTF → TF

    :param E: module entwining
    :return: (t·f)×(l·t·f) map
    """
    sig = E.signature()
    return sig.evaluate(vert(sig.at("T", "mu"), sig.at("", "lam", "F")))


def zeta(E: ComoduleEntwining) -> LinMap:
    """
    The H-coaction induced on TG by the free comodule (G, δ),
    ζ = ψG·Tδ: TG → HTG
    """
    sig = E.signature()
    return sig.evaluate(vert(sig.at("", "psi", "G"), sig.at("T", "delta")))


def normalize(E: Entwining) -> Entwining:
    """
    Representative of the class of λ (resp. ψ) that induces the same lifting:
    Tϑ·λ for modules and ψ·Tγ for comodules

    :param E: module or comodule entwining
    :return: entwining of the same kind with the normalized transformation
    """
    sig = E.signature()
    if isinstance(E, ModuleEntwining):
        lam = sig.evaluate(vert(sig.at("T", theta_cell(sig)), sig.gen("lam")))
        return replace(E, lam=lam)
    psi = sig.evaluate(vert(sig.gen("psi"), sig.at("T", gamma_cell(sig))))
    return replace(E, psi=psi)
