"""
q-counital coalgebras, their comodules and morphisms, and the law reports

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
from enum import Enum
from types import MappingProxyType
from typing import Dict, Mapping

# Exact linear algebra
from ..linalg import ExactRing, LinMap, compose, identity, tensor

# Diagram
from ..diagram import CellExpr, LawResult, Signature, vert

# Constants
from .constants import InvalidStructure

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


##################
# CLASSIFICATION #
##################


class ComonadClass(str, Enum):
    Q_COUNITAL = "q-counital"
    R_COUNITAL = "r-counital"
    WEAK = "weak-comonad"

    @property
    def level(self) -> int:
        return list(ComonadClass).index(self)

    def at_least(self, other: "ComonadClass") -> bool:
        return self.level >= other.level


# ------------------------------------------------------------------------------


#############
# COALGEBRA #
#############


@dataclass(frozen=True)
class QCounitalCoalgebra:
    """
    Coassociative, possibly non-counital coalgebra (C, Δ, ε) on R^dim; it
    houses the q-counital comonad G = C⊗– with δ = Δ⊗– and ε = ε⊗–
    """

    ring: ExactRing
    dim: int
    delta: LinMap
    """Coproduct C → C⊗C"""

    eps: LinMap
    """Quasi-counit C → R"""

    def __post_init__(self):
        if self.delta.shape != (self.dim * self.dim, self.dim):
            raise InvalidStructure(f"coproduct must be {self.dim ** 2}x{self.dim}")
        if self.eps.shape != (1, self.dim):
            raise InvalidStructure(f"quasi-counit must be 1x{self.dim}")
        if not is_coassociative(self.ring, self.dim, self.delta):
            raise InvalidStructure("coproduct is not coassociative")

    def signature(self, letter: str = "G", delta: str = "delta", eps: str = "eps") -> Signature:
        """Signature with the letter G and the generators δ, ε"""
        return Signature.build(
            self.ring,
            {letter: self.dim},
            [(delta, letter, f"{letter} {letter}", self.delta), (eps, letter, "", self.eps)],
        )

    def register(
        self, sig: Signature, letter: str = "G", delta: str = "delta", eps: str = "eps"
    ) -> Signature:
        return sig.extend(
            {letter: self.dim},
            [(delta, letter, f"{letter} {letter}", self.delta), (eps, letter, "", self.eps)],
        )

    def coproduct(self, c: LinMap) -> LinMap:
        """Δ(c) for an element given as a dim×1 column"""
        return compose(self.delta, c)


def is_coassociative(ring: ExactRing, dim: int, delta: LinMap) -> bool:
    """Decide Gδ·δ = δG·δ"""
    sig = Signature.build(ring, {"G": dim}, [("delta", "G", "G G", delta)])
    d = sig.gen("delta")
    return sig.check_equation(vert(sig.at("G", "delta"), d), vert(sig.at("", "delta", "G"), d)).holds


def gamma_cell(sig: Signature, letter: str = "G", delta: str = "delta", eps: str = "eps") -> CellExpr:
    """γ = Gε·δ"""
    return vert(sig.at(letter, eps), sig.gen(delta))


def gamma_bar_cell(
    sig: Signature, letter: str = "G", delta: str = "delta", eps: str = "eps"
) -> CellExpr:
    """γ̲ = εG·δ"""
    return vert(sig.at("", eps, letter), sig.gen(delta))


# ------------------------------------------------------------------------------


##############
# LAW REPORT #
##############


@dataclass(frozen=True)
class LawReportComonad:
    coassoc: bool
    counit_regular: bool
    counit_symmetric: bool
    comult_compatible: bool
    classification: ComonadClass
    gamma: LinMap
    gamma_bar: LinMap
    results: Mapping[str, LawResult]

    def flags(self) -> Dict[str, bool]:
        return {name: result.holds for name, result in self.results.items()}


def classify(counit_regular: bool, comult_compatible: bool, counit_symmetric: bool) -> ComonadClass:
    if counit_regular and comult_compatible:
        return ComonadClass.WEAK if counit_symmetric else ComonadClass.R_COUNITAL
    return ComonadClass.Q_COUNITAL


def comonad_equations(
    sig: Signature, letter: str = "G", delta: str = "delta", eps: str = "eps"
) -> Dict[str, LawResult]:
    """
    The four comonad laws over any signature carrying the letter and generators
    """
    G, d, e = letter, sig.gen(delta), sig.gen(eps)
    gamma = gamma_cell(sig, G, delta, eps)
    return {
        "coassoc": sig.check_equation(vert(sig.at(G, delta), d), vert(sig.at("", delta, G), d)),
        "counit-regular": sig.check_equation(e, vert(e, gamma)),
        "counit-symmetric": sig.check_equation(gamma, gamma_bar_cell(sig, G, delta, eps)),
        "comult-compatible": sig.check_equation(
            d, vert(sig.at(G, eps, G), sig.at("", delta, G), d)
        ),
    }


def law_report_co(G: QCounitalCoalgebra) -> LawReportComonad:
    """
    Decide coassociativity, regularity and symmetry of ε and compatibility of δ

    :param G: coalgebra housing the q-counital comonad
    :return: flags, classification, γ and γ̲
    """
    sig = G.signature()
    results = comonad_equations(sig)
    regular = results["counit-regular"].holds
    symmetric = results["counit-symmetric"].holds
    compatible = results["comult-compatible"].holds
    return LawReportComonad(
        coassoc=results["coassoc"].holds,
        counit_regular=regular,
        counit_symmetric=symmetric,
        comult_compatible=compatible,
        classification=classify(regular, compatible, symmetric),
        gamma=sig.evaluate(gamma_cell(sig)),
        gamma_bar=sig.evaluate(gamma_bar_cell(sig)),
        results=MappingProxyType(results),
    )


# ------------------------------------------------------------------------------


############
# COMODULE #
############


@dataclass(frozen=True)
class CoalgebraComodule:
    coalgebra: QCounitalCoalgebra
    dim: int
    upsilon: LinMap
    """Coaction B → C⊗B"""

    def __post_init__(self):
        if self.upsilon.shape != (self.coalgebra.dim * self.dim, self.dim):
            raise InvalidStructure(
                f"coaction must be {self.coalgebra.dim * self.dim}x{self.dim}"
            )

    def signature(self, letter: str = "G", obj: str = "B", coaction: str = "ups") -> Signature:
        return self.coalgebra.signature(letter).extend(
            {obj: self.dim}, [(coaction, obj, f"{letter} {obj}", self.upsilon)]
        )


@dataclass(frozen=True)
class ComoduleReport:
    coaction_ok: bool
    compatible: bool
    results: Mapping[str, LawResult]


def comodule_report(M: CoalgebraComodule) -> ComoduleReport:
    """
    Decide the coaction law and compatibility υ = Gε_B·δ_B·υ, i.e. the
    coaction is fixed by γ on its coalgebra leg
    """
    sig = M.signature()
    ups = sig.gen("ups")
    results = {
        "coaction": sig.check_equation(
            vert(sig.at("G", "ups"), ups), vert(sig.at("", "delta", "B"), ups)
        ),
        "comodule-compatible": sig.check_equation(
            ups, vert(sig.at("G", "eps", "B"), sig.at("", "delta", "B"), ups)
        ),
    }
    return ComoduleReport(
        coaction_ok=results["coaction"].holds,
        compatible=results["comodule-compatible"].holds,
        results=MappingProxyType(results),
    )


def free_comodule(G: QCounitalCoalgebra, dim: int) -> CoalgebraComodule:
    """(φ^G(R^dim), δ_{R^dim})"""
    return CoalgebraComodule(G, G.dim * dim, tensor(G.delta, identity(G.ring, dim)))


# ------------------------------------------------------------------------------


####################
# COMONAD MORPHISM #
####################


@dataclass(frozen=True)
class ComonadMorphism:
    source: QCounitalCoalgebra
    target: QCounitalCoalgebra
    h: LinMap
    """Carrier map C → C'"""


@dataclass(frozen=True)
class MorphismReport:
    coproduct_ok: bool
    counit_ok: bool
    results: Mapping[str, LawResult]

    @property
    def holds(self) -> bool:
        return self.coproduct_ok and self.counit_ok


def comonad_morphism_report(morphism: ComonadMorphism) -> MorphismReport:
    """Decide hh·δ = δ'·h and ε = ε'·h"""
    source, target = morphism.source, morphism.target
    sig = source.signature("G").extend(
        {"K": target.dim},
        [
            ("delta2", "K", "K K", target.delta),
            ("eps2", "K", "", target.eps),
            ("h", "G", "K", morphism.h),
        ],
    )
    h = sig.gen("h")
    results = {
        "morphism-coproduct": sig.check_equation(
            vert(sig.horizontal(h, h), sig.gen("delta")), vert(sig.gen("delta2"), h)
        ),
        "morphism-counit": sig.check_equation(sig.gen("eps"), vert(sig.gen("eps2"), h)),
    }
    return MorphismReport(
        results["morphism-coproduct"].holds,
        results["morphism-counit"].holds,
        MappingProxyType(results),
    )
