"""
q-unital algebras, their modules and morphisms, and the law reports

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


class MonadClass(str, Enum):
    """Three levels, each one implying the previous"""

    Q_UNITAL = "q-unital"
    R_UNITAL = "r-unital"
    WEAK = "weak-monad"

    @property
    def level(self) -> int:
        return list(MonadClass).index(self)

    def at_least(self, other: "MonadClass") -> bool:
        return self.level >= other.level


# ------------------------------------------------------------------------------


###########
# ALGEBRA #
###########


@dataclass(frozen=True)
class QUnitalAlgebra:
    """
    Associative, possibly non-unital algebra (A, m, u) on R^dim; it houses
    the q-unital monad F = A⊗– with μ = m⊗– and η = u⊗–
    """

    ring: ExactRing
    dim: int
    m: LinMap
    """Product A⊗A → A"""

    u: LinMap
    """Quasi-unit R → A, its column is the element e"""

    def __post_init__(self):
        if self.m.shape != (self.dim, self.dim * self.dim):
            raise InvalidStructure(f"product must be {self.dim}x{self.dim ** 2}")
        if self.u.shape != (self.dim, 1):
            raise InvalidStructure(f"quasi-unit must be {self.dim}x1")
        if not is_associative(self.ring, self.dim, self.m):
            raise InvalidStructure("product is not associative")

    def signature(self, letter: str = "F", mu: str = "mu", eta: str = "eta") -> Signature:
        """Signature with the letter F and the generators μ, η"""
        return Signature.build(
            self.ring,
            {letter: self.dim},
            [(mu, f"{letter} {letter}", letter, self.m), (eta, "", letter, self.u)],
        )

    def register(
        self, sig: Signature, letter: str = "F", mu: str = "mu", eta: str = "eta"
    ) -> Signature:
        """Add this algebra's letter and generators to an existing signature"""
        return sig.extend(
            {letter: self.dim},
            [(mu, f"{letter} {letter}", letter, self.m), (eta, "", letter, self.u)],
        )

    def product(self, x: LinMap, y: LinMap) -> LinMap:
        """Product of two elements given as dim×1 columns"""
        return compose(self.m, tensor(x, y))


def is_associative(ring: ExactRing, dim: int, m: LinMap) -> bool:
    """Decide μ·Fμ = μ·μF for a product given by structure constants"""
    sig = Signature.build(ring, {"F": dim}, [("mu", "F F", "F", m)])
    return sig.check_equation(
        vert(sig.gen("mu"), sig.at("F", "mu")),
        vert(sig.gen("mu"), sig.at("", "mu", "F")),
    ).holds


def theta_cell(sig: Signature, letter: str = "F", mu: str = "mu", eta: str = "eta") -> CellExpr:
    """ϑ = μ·Fη"""
    return vert(sig.gen(mu), sig.at(letter, eta))


def theta_bar_cell(
    sig: Signature, letter: str = "F", mu: str = "mu", eta: str = "eta"
) -> CellExpr:
    """ϑ̲ = μ·ηF"""
    return vert(sig.gen(mu), sig.at("", eta, letter))


# ------------------------------------------------------------------------------


##############
# LAW REPORT #
##############


@dataclass(frozen=True)
class LawReportMonad:
    assoc: bool
    unit_regular: bool
    unit_symmetric: bool
    mult_compatible: bool
    classification: MonadClass
    theta: LinMap
    """ϑ = μ·Fη"""

    theta_bar: LinMap
    """ϑ̲ = μ·ηF"""

    results: Mapping[str, LawResult]
    """Flag name -> equation outcome, witnesses included"""

    def flags(self) -> Dict[str, bool]:
        return {name: result.holds for name, result in self.results.items()}


def classify(unit_regular: bool, mult_compatible: bool, unit_symmetric: bool) -> MonadClass:
    if unit_regular and mult_compatible:
        return MonadClass.WEAK if unit_symmetric else MonadClass.R_UNITAL
    return MonadClass.Q_UNITAL


def monad_equations(
    sig: Signature, letter: str = "F", mu: str = "mu", eta: str = "eta"
) -> Dict[str, LawResult]:
    """
    The four monad laws over any signature carrying the letter and generators
    """
    F, m, e = letter, sig.gen(mu), sig.gen(eta)
    theta = theta_cell(sig, F, mu, eta)
    return {
        "assoc": sig.check_equation(vert(m, sig.at(F, mu)), vert(m, sig.at("", mu, F))),
        "unit-regular": sig.check_equation(e, vert(theta, e)),
        "unit-symmetric": sig.check_equation(theta, theta_bar_cell(sig, F, mu, eta)),
        "mult-compatible": sig.check_equation(
            m, vert(m, sig.at("", mu, F), sig.at(F, eta, F))
        ),
    }


def law_report(F: QUnitalAlgebra) -> LawReportMonad:
    """
    Decide associativity, regularity and symmetry of η and compatibility of μ

    :param F: algebra housing the q-unital monad
    :return: flags, classification, ϑ and ϑ̲
    """
    sig = F.signature()
    results = monad_equations(sig)
    regular = results["unit-regular"].holds
    symmetric = results["unit-symmetric"].holds
    compatible = results["mult-compatible"].holds
    return LawReportMonad(
        assoc=results["assoc"].holds,
        unit_regular=regular,
        unit_symmetric=symmetric,
        mult_compatible=compatible,
        classification=classify(regular, compatible, symmetric),
        theta=sig.evaluate(theta_cell(sig)),
        theta_bar=sig.evaluate(theta_bar_cell(sig)),
        results=MappingProxyType(results),
    )


# ------------------------------------------------------------------------------


##########
# MODULE #
##########


@dataclass(frozen=True)
class AlgebraModule:
    """
    Carrier R^dim with an action ϱ: A⊗M → M; the action law is decided
    by module_report, not enforced here
    """

    algebra: QUnitalAlgebra
    dim: int
    rho: LinMap

    def __post_init__(self):
        if self.rho.shape != (self.dim, self.algebra.dim * self.dim):
            raise InvalidStructure(
                f"action must be {self.dim}x{self.algebra.dim * self.dim}"
            )

    def signature(self, letter: str = "F", obj: str = "A", action: str = "phi") -> Signature:
        """Algebra signature plus the object letter and the action F A → A"""
        return self.algebra.signature(letter).extend(
            {obj: self.dim}, [(action, f"{letter} {obj}", obj, self.rho)]
        )


@dataclass(frozen=True)
class ModuleReport:
    action_ok: bool
    compatible: bool
    results: Mapping[str, LawResult]


def module_report(M: AlgebraModule) -> ModuleReport:
    """
    Decide the action law and compatibility ϱ = ϱ·μ_A·Fη_A

    :param M: module to check
    """
    sig = M.signature()
    phi = sig.gen("phi")
    results = {
        "action": sig.check_equation(
            vert(phi, sig.at("F", "phi")), vert(phi, sig.at("", "mu", "A"))
        ),
        "module-compatible": sig.check_equation(
            phi, vert(phi, sig.at("", "mu", "A"), sig.at("F", "eta", "A"))
        ),
    }
    return ModuleReport(
        action_ok=results["action"].holds,
        compatible=results["module-compatible"].holds,
        results=MappingProxyType(results),
    )


def free_module(F: QUnitalAlgebra, dim: int) -> AlgebraModule:
    """(F(R^dim), μ_{R^dim})"""
    return AlgebraModule(F, F.dim * dim, tensor(F.m, identity(F.ring, dim)))


# ------------------------------------------------------------------------------


##################
# MONAD MORPHISM #
##################


@dataclass(frozen=True)
class MonadMorphism:
    source: QUnitalAlgebra
    target: QUnitalAlgebra
    h: LinMap
    """Carrier map A → A'"""


@dataclass(frozen=True)
class MorphismReport:
    product_ok: bool
    unit_ok: bool
    results: Mapping[str, LawResult]

    @property
    def holds(self) -> bool:
        return self.product_ok and self.unit_ok


def monad_morphism_report(morphism: MonadMorphism) -> MorphismReport:
    """Decide μ'·hh = h·μ and η' = h·η"""
    source, target = morphism.source, morphism.target
    sig = source.signature("F").extend(
        {"K": target.dim},
        [
            ("mu2", "K K", "K", target.m),
            ("eta2", "", "K", target.u),
            ("h", "F", "K", morphism.h),
        ],
    )
    h = sig.gen("h")
    results = {
        "morphism-product": sig.check_equation(
            vert(sig.gen("mu2"), sig.horizontal(h, h)), vert(h, sig.gen("mu"))
        ),
        "morphism-unit": sig.check_equation(sig.gen("eta2"), vert(h, sig.gen("eta"))),
    }
    return MorphismReport(
        results["morphism-product"].holds,
        results["morphism-unit"].holds,
        MappingProxyType(results),
    )


