"""
Dual pairings L = A⊗–, R = B⊗– and their regularity

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

# Monadics
from ..monadics import PropertyReport

# Constants
from .constants import HomShapeMismatch, PreconditionViolated

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


################
# DUAL PAIRING #
################


class Direction(str, Enum):
    ALPHA = "alpha"
    """Mor(L(A'), B') → Mor(A', R(B'))"""

    BETA = "beta"
    """Mor(A', R(B')) → Mor(L(A'), B')"""


@dataclass(frozen=True)
class DualPairing:
    """
    Pairing (L, R, α, β) with L = A⊗– and R = B⊗– on free modules over
    one ring, given by its quasi-unit η ∈ B⊗A and quasi-counit ε: A⊗B → R
    """

    ring: ExactRing
    a: int
    """Carrier dimension of L"""

    b: int
    """Carrier dimension of R"""

    eta: LinMap
    eps: LinMap

    def __post_init__(self):
        if self.eta.shape != (self.b * self.a, 1):
            raise HomShapeMismatch(f"quasi-unit must be {self.b * self.a}x1")
        if self.eps.shape != (1, self.a * self.b):
            raise HomShapeMismatch(f"quasi-counit must be 1x{self.a * self.b}")

    def signature(self) -> Signature:
        """Letters L, R and the generators η: I → RL, ε: LR → I"""
        return Signature.build(
            self.ring,
            {"L": self.a, "R": self.b},
            [("eta", "", "R L", self.eta), ("eps", "L R", "", self.eps)],
        )

    def replace(self, **changes) -> "DualPairing":
        fields = dict(ring=self.ring, a=self.a, b=self.b, eta=self.eta, eps=self.eps)
        fields.update(changes)
        return DualPairing(**fields)


# ------------------------------------------------------------------------------


#################
# TRANSPOSITION #
#################


def alpha_map(P: DualPairing, f: LinMap, a_dim: int, b_dim: int) -> LinMap:
    """α(f) = R(f)·η_A'"""
    return compose(tensor(identity(P.ring, P.b), f), tensor(P.eta, identity(P.ring, a_dim)))


def beta_map(P: DualPairing, g: LinMap, a_dim: int, b_dim: int) -> LinMap:
    """β(g) = ε_B'·L(g)"""
    return compose(tensor(P.eps, identity(P.ring, b_dim)), tensor(identity(P.ring, P.a), g))


def transpose(
    P: DualPairing, direction: Direction, f: LinMap, a_dim: int, b_dim: int
) -> LinMap:
    """
    Transpose a morphism across the pairing

    :param P: pairing
    :param direction: α for f: L(A') → B', β for g: A' → R(B')
    :param f: morphism to transpose
    :param a_dim: dimension of the test object A'
    :param b_dim: dimension of the test object B'
    :raise HomShapeMismatch: when f does not have the hom-set shape
    """
    direction = Direction(direction)
    if direction is Direction.ALPHA:
        expected = (b_dim, P.a * a_dim)
        transposer = alpha_map
    else:
        expected = (P.b * b_dim, a_dim)
        transposer = beta_map
    if f.shape != expected:
        raise HomShapeMismatch(
            f"{direction.value} needs a {expected[0]}x{expected[1]} morphism, got {f.shape}"
        )
    return transposer(P, f, a_dim, b_dim)


# ------------------------------------------------------------------------------


#########################
# NATURAL ENDOMORPHISMS #
#########################


def theta_cell(sig: Signature) -> CellExpr:
    """ϑ = RεL·RLη"""
    return vert(sig.at("R", "eps", "L"), sig.at("R L", "eta"))


def theta_bar_cell(sig: Signature) -> CellExpr:
    """ϑ̲ = RεL·ηRL"""
    return vert(sig.at("R", "eps", "L"), sig.at("", "eta", "R L"))


def gamma_cell(sig: Signature) -> CellExpr:
    """γ = LRε·LηR"""
    return vert(sig.at("L R", "eps"), sig.at("L", "eta", "R"))


def gamma_bar_cell(sig: Signature) -> CellExpr:
    """γ̲ = εLR·LηR"""
    return vert(sig.at("", "eps", "L R"), sig.at("L", "eta", "R"))


def h_cell(sig: Signature) -> CellExpr:
    """β·α(I_L) = εL·Lη"""
    return vert(sig.at("", "eps", "L"), sig.at("L", "eta"))


def k_cell(sig: Signature) -> CellExpr:
    """α·β(I_R) = Rε·ηR"""
    return vert(sig.at("R", "eps"), sig.at("", "eta", "R"))


# ------------------------------------------------------------------------------


##########
# REPORT #
##########


@dataclass(frozen=True)
class PairingReport:
    alpha_regular: bool
    beta_regular: bool
    alpha_symmetric: bool
    beta_symmetric: bool
    semiadjoint: bool
    """α·β = I"""

    adjunction: bool
    """α·β = I and β·α = I"""

    theta: LinMap
    theta_bar: LinMap
    gamma: LinMap
    gamma_bar: LinMap
    results: Mapping[str, LawResult]

    @property
    def regular(self) -> bool:
        return self.alpha_regular and self.beta_regular

    def flags(self) -> Dict[str, bool]:
        return {name: result.holds for name, result in self.results.items()}


def pairing_report(P: DualPairing) -> PairingReport:
    """
    Decide regularity through the images of the identities,
    α regular ⟺ RεL·RLη·η = η and β regular ⟺ ε·LRε·LηR = ε,
    symmetry through ϑ = ϑ̲ and γ = γ̲

    :param P: pairing
    :return: flags and the four natural endomorphisms
    """
    sig = P.signature()
    eta, eps = sig.gen("eta"), sig.gen("eps")
    theta, theta_bar = theta_cell(sig), theta_bar_cell(sig)
    gamma, gamma_bar = gamma_cell(sig), gamma_bar_cell(sig)
    results = {
        "alpha-regular": sig.check_equation(vert(theta, eta), eta),
        "beta-regular": sig.check_equation(vert(eps, gamma), eps),
        "alpha-symmetric": sig.check_equation(theta, theta_bar),
        "beta-symmetric": sig.check_equation(gamma, gamma_bar),
        "semiadjoint": sig.check_equation(k_cell(sig), sig.ident("R")),
    }
    inverse = sig.check_equation(h_cell(sig), sig.ident("L"))
    results["adjunction"] = LawResult(
        results["semiadjoint"].holds and inverse.holds,
        results["semiadjoint"].witness if inverse.holds else inverse.witness,
        f"{results['semiadjoint'].lhs} ; {inverse.lhs}",
        f"{results['semiadjoint'].rhs} ; {inverse.rhs}",
    )
    return PairingReport(
        alpha_regular=results["alpha-regular"].holds,
        beta_regular=results["beta-regular"].holds,
        alpha_symmetric=results["alpha-symmetric"].holds,
        beta_symmetric=results["beta-symmetric"].holds,
        semiadjoint=results["semiadjoint"].holds,
        adjunction=results["adjunction"].holds,
        theta=sig.evaluate(theta),
        theta_bar=sig.evaluate(theta_bar),
        gamma=sig.evaluate(gamma),
        gamma_bar=sig.evaluate(gamma_bar),
        results=MappingProxyType(results),
    )


# ------------------------------------------------------------------------------


##################
# REGULARIZATION #
##################


def regularize_beta(P: DualPairing) -> DualPairing:
    """
    β' = β·α·β, realized on the quasi-counit as ε' = ε·γ;
    (L, R, α, β') is regular when α is

    :raise PreconditionViolated: when α is not regular
    """
    if not pairing_report(P).alpha_regular:
        raise PreconditionViolated("α·β·α = α")
    sig = P.signature()
    return P.replace(eps=sig.evaluate(vert(sig.gen("eps"), gamma_cell(sig))))


def regularize_alpha(P: DualPairing) -> DualPairing:
    """
    α' = α·β·α, realized on the quasi-unit as η' = ϑ·η;
    (L, R, α', β) is regular when β is

    :raise PreconditionViolated: when β is not regular
    """
    if not pairing_report(P).beta_regular:
        raise PreconditionViolated("β·α·β = β")
    sig = P.signature()
    return P.replace(eta=sig.evaluate(vert(theta_cell(sig), sig.gen("eta"))))


# ------------------------------------------------------------------------------


##############
# IDENTITIES #
##############


def natural_endomorphism_identities(P: DualPairing) -> PropertyReport:
    """
    Identities relating ϑ, ϑ̲ with the product RεL and γ, γ̲ with the
    coproduct LηR; they hold for every pairing
    """
    sig = P.signature()
    theta, theta_bar = theta_cell(sig), theta_bar_cell(sig)
    gamma, gamma_bar = gamma_cell(sig), gamma_bar_cell(sig)
    mult, comult = sig.at("R", "eps", "L"), sig.at("L", "eta", "R")
    results = {
        "mult-theta": sig.check_equation(
            vert(mult, sig.at("R L", theta)), vert(theta, mult)
        ),
        "mult-theta-bar": sig.check_equation(
            vert(mult, sig.at("", theta_bar, "R L")), vert(theta_bar, mult)
        ),
        "theta-commute": sig.check_equation(
            vert(theta_bar, theta), vert(theta, theta_bar)
        ),
        "comult-gamma": sig.check_equation(
            vert(sig.at("L R", gamma), comult), vert(comult, gamma)
        ),
        "comult-gamma-bar": sig.check_equation(
            vert(sig.at("", gamma_bar, "L R"), comult), vert(comult, gamma_bar)
        ),
        "gamma-commute": sig.check_equation(
            vert(gamma_bar, gamma), vert(gamma, gamma_bar)
        ),
    }
    return PropertyReport(MappingProxyType(results))


def regularity_consequences(P: DualPairing) -> PropertyReport:
    """
    α regular: β·α(I_L), ϑ, ϑ̲ idempotent and ϑ·η = η = ϑ̲·η.
    β regular: α·β(I_R), γ, γ̲ idempotent and ε·γ = ε = ε·γ̲.
    """
    report = pairing_report(P)
    sig = P.signature()
    eta, eps = sig.gen("eta"), sig.gen("eps")
    results = {}

    def idempotent(cell: CellExpr) -> LawResult:
        return sig.check_equation(vert(cell, cell), cell)

    if report.alpha_regular:
        theta, theta_bar = theta_cell(sig), theta_bar_cell(sig)
        results["h-idempotent"] = idempotent(h_cell(sig))
        results["theta-idempotent"] = idempotent(theta)
        results["theta-bar-idempotent"] = idempotent(theta_bar)
        results["theta-fixes-unit"] = sig.check_equation(vert(theta, eta), eta)
        results["theta-bar-fixes-unit"] = sig.check_equation(vert(theta_bar, eta), eta)
    if report.beta_regular:
        gamma, gamma_bar = gamma_cell(sig), gamma_bar_cell(sig)
        results["k-idempotent"] = idempotent(k_cell(sig))
        results["gamma-idempotent"] = idempotent(gamma)
        results["gamma-bar-idempotent"] = idempotent(gamma_bar)
        results["counit-fixes-gamma"] = sig.check_equation(vert(eps, gamma), eps)
        results["counit-fixes-gamma-bar"] = sig.check_equation(vert(eps, gamma_bar), eps)
    return PropertyReport(MappingProxyType(results))
