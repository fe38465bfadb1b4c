"""
Mixed distributive laws between a weak monad and a weak comonad

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
from typing import Dict, Iterable, Mapping

# Exact linear algebra
from ..linalg import LinMap

# Diagram
from ..diagram import CellExpr, LawResult, Signature, vert

# Monadics and comonadics
from ..comonadics import ComonadClass, QCounitalCoalgebra, gamma_cell, law_report_co
from ..monadics import MonadClass, PropertyReport, QUnitalAlgebra, law_report, theta_cell

# Constants
from .constants import LAWS, REPORT_FLAGS, InvalidMixedLaw, PreconditionViolated

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


##########################
# MIXED DISTRIBUTIVE LAW #
##########################


@dataclass(frozen=True)
class MixedDistributiveLaw:
    """
    ω: FG → GF between the weak monad of F and the weak comonad of G
    """

    F: QUnitalAlgebra
    G: QCounitalCoalgebra
    omega: LinMap
    """ω as a (g·f)×(f·g) map"""

    def __post_init__(self):
        if self.F.ring != self.G.ring or self.omega.ring != self.F.ring:
            raise InvalidMixedLaw("F, G and ω must share one ring")
        expected = (self.G.dim * self.F.dim, self.F.dim * self.G.dim)
        if self.omega.shape != expected:
            raise InvalidMixedLaw(f"ω must be {expected[0]}x{expected[1]}")
        if law_report(self.F).classification is not MonadClass.WEAK:
            raise InvalidMixedLaw("F is not a weak monad")
        if law_report_co(self.G).classification is not ComonadClass.WEAK:
            raise InvalidMixedLaw("G is not a weak comonad")

    def signature(self) -> Signature:
        """Letters F, G with μ, η, δ, ε and ω (omega)"""
        sig = self.G.register(self.F.signature(), "G", "delta", "eps")
        return sig.extend({}, [("omega", "F G", "G F", self.omega)])


# ------------------------------------------------------------------------------


#########
# CELLS #
#########


def xi_cell(sig: Signature, obj: str = "") -> CellExpr:
    """ξ = εF·ω·ηG: G → F, at the object word obj"""
    return vert(
        sig.at("", "eps", f"F {obj}"),
        sig.at("", "omega", obj),
        sig.at("", "eta", f"G {obj}"),
    )


def kappa_cell(sig: Signature, obj: str = "F", action: CellExpr = None) -> CellExpr:
    """
    κ̂ = Gμ·ωF·ηGF: GF → GF; at a module (obj, action) the action takes the
    place of μ, giving G obj → G obj
    """
    if action is None:
        obj, action = "F", sig.gen("mu")
    return vert(sig.at("G", action), sig.at("", "omega", obj), sig.at("", "eta", f"G {obj}"))


def tau_cell(sig: Signature, obj: str = "G", coaction: CellExpr = None) -> CellExpr:
    """
    τ̂ = εFG·ωG·Fδ: FG → FG; at a comodule (obj, coaction) the coaction takes
    the place of δ, giving F obj → F obj
    """
    if coaction is None:
        obj, coaction = "G", sig.gen("delta")
    return vert(sig.at("", "eps", f"F {obj}"), sig.at("", "omega", obj), sig.at("F", coaction))


# ------------------------------------------------------------------------------


################
# MIXED REPORT #
################


@dataclass(frozen=True)
class MixedReport:
    mon_rect: bool
    mon_square: bool
    com_rect: bool
    com_square: bool
    cond_ve: bool
    eta_unit: bool
    counit_2: bool
    unit_2: bool
    xi: LinMap
    """ξ: G → F"""

    kappa_hat: LinMap
    tau_hat: LinMap
    results: Mapping[str, LawResult]

    @property
    def lifts_to_modules(self) -> bool:
        return self.mon_rect and self.mon_square

    @property
    def lifts_to_comodules(self) -> bool:
        return self.com_rect and self.com_square

    def flags(self) -> Dict[str, bool]:
        return {name: getattr(self, name) for name in REPORT_FLAGS}


def mixed_equations(sig: Signature) -> Dict[str, LawResult]:
    """Every diagram of a mixed distributive law, keyed by flag name"""
    omega = sig.gen("omega")
    theta, gamma = theta_cell(sig), gamma_cell(sig)
    return {
        "mon-rect": sig.check_equation(
            vert(sig.at("G", "mu"), sig.at("", "omega", "F"), sig.at("F", "omega")),
            vert(omega, sig.at("", "mu", "G")),
        ),
        "mon-square-left": sig.check_equation(vert(omega, sig.at("", theta, "G")), omega),
        "mon-square-right": sig.check_equation(vert(sig.at("G", theta), omega), omega),
        "com-rect": sig.check_equation(
            vert(sig.at("", "delta", "F"), omega),
            vert(sig.at("G", "omega"), sig.at("", "omega", "G"), sig.at("F", "delta")),
        ),
        "com-square-left": sig.check_equation(vert(omega, sig.at("F", gamma)), omega),
        "com-square-right": sig.check_equation(vert(sig.at("", gamma, "F"), omega), omega),
        "cond-ve": sig.check_equation(
            vert(theta, sig.at("F", "eps")), vert(sig.at("", "eps", "F"), omega)
        ),
        "eta-unit": sig.check_equation(
            vert(omega, sig.at("", "eta", "G")), vert(sig.at("G", "eta"), gamma)
        ),
        "counit-2": sig.check_equation(
            vert(
                sig.gen("mu"),
                sig.at("F", "eps", "F"),
                sig.at("F", "omega"),
                sig.at("F", "eta", "G"),
            ),
            vert(sig.at("", "eps", "F"), omega),
        ),
        "unit-2": sig.check_equation(
            vert(
                sig.at("G", "eps", "F"),
                sig.at("G", "omega"),
                sig.at("G", "eta", "G"),
                sig.gen("delta"),
            ),
            vert(omega, sig.at("", "eta", "G")),
        ),
    }


def mixed_report(W: MixedDistributiveLaw) -> MixedReport:
    """
    Decide the lifting diagrams, the pre-(co)unit diagrams and the
    alternative ones, and evaluate ξ, κ̂ and τ̂

    :param W: mixed distributive law
    """
    sig = W.signature()
    results = mixed_equations(sig)
    return MixedReport(
        mon_rect=results["mon-rect"].holds,
        mon_square=results["mon-square-left"].holds and results["mon-square-right"].holds,
        com_rect=results["com-rect"].holds,
        com_square=results["com-square-left"].holds and results["com-square-right"].holds,
        cond_ve=results["cond-ve"].holds,
        eta_unit=results["eta-unit"].holds,
        counit_2=results["counit-2"].holds,
        unit_2=results["unit-2"].holds,
        xi=sig.evaluate(xi_cell(sig)),
        kappa_hat=sig.evaluate(kappa_cell(sig)),
        tau_hat=sig.evaluate(tau_cell(sig)),
        results=MappingProxyType(results),
    )


def require(report: MixedReport, names: Iterable[str]) -> None:
    """
    :raise PreconditionViolated: with the label of the first failing diagram
    """
    for name in names:
        if not report.results[name]:
            raise PreconditionViolated(LAWS[name])


MON_DIAGRAMS = ("mon-rect", "mon-square-left", "mon-square-right")
COM_DIAGRAMS = ("com-rect", "com-square-left", "com-square-right")

# ------------------------------------------------------------------------------


#################
# KAPPA AND TAU #
#################


def kappa_tau_properties(W: MixedDistributiveLaw) -> PropertyReport:
    """
    The four identities relating μ, δ, ξ, κ̂ and τ̂, plus idempotency of κ̂
    (resp. τ̂) whenever the monad (resp. comonad) rectangle commutes
    """
    sig = W.signature()
    kappa, tau = kappa_cell(sig), tau_cell(sig)
    results = {
        "kappa-natural": sig.check_equation(
            vert(sig.at("G", "mu"), sig.at("", kappa, "F")), vert(kappa, sig.at("G", "mu"))
        ),
        "tau-natural": sig.check_equation(
            vert(sig.at("", tau, "G"), sig.at("F", "delta")), vert(sig.at("F", "delta"), tau)
        ),
        "xi-kappa": sig.check_equation(
            vert(sig.gen("mu"), sig.at("", xi_cell(sig), "F")),
            vert(sig.at("", "eps", "F"), kappa),
        ),
        "xi-tau": sig.check_equation(
            vert(sig.at("", xi_cell(sig), "G"), sig.gen("delta")),
            vert(tau, sig.at("", "eta", "G")),
        ),
    }
    equations = mixed_equations(sig)
    if equations["mon-rect"]:
        results["kappa-idempotent"] = sig.check_equation(vert(kappa, kappa), kappa)
    if equations["com-rect"]:
        results["tau-idempotent"] = sig.check_equation(vert(tau, tau), tau)
    return PropertyReport(MappingProxyType(results))


def kappa_tau_commute(W: MixedDistributiveLaw) -> LawResult:
    """κ̂·ω = ω·τ̂, reported as observed"""
    sig = W.signature()
    omega = sig.gen("omega")
    return sig.check_equation(vert(kappa_cell(sig), omega), vert(omega, tau_cell(sig)))


def counit_consequences(W: MixedDistributiveLaw) -> PropertyReport:
    """
    μG·Fτ̂ = τ̂·μG and τ̂ = ϑγ, expected under the monad diagrams and (cond-ve)

    :raise PreconditionViolated: when one of those diagrams fails
    """
    require(mixed_report(W), MON_DIAGRAMS + ("cond-ve",))
    sig = W.signature()
    tau = tau_cell(sig)
    results = {
        "tau-mu": sig.check_equation(
            vert(sig.at("", "mu", "G"), sig.at("F", tau)), vert(tau, sig.at("", "mu", "G"))
        ),
        "tau-theta-gamma": sig.check_equation(
            tau, sig.horizontal(theta_cell(sig), gamma_cell(sig))
        ),
    }
    return PropertyReport(MappingProxyType(results))


def unit_consequences(W: MixedDistributiveLaw) -> PropertyReport:
    """
    Gκ̂·δF = δF·κ̂ and κ̂ = γϑ, expected under the comonad diagrams and (eta-unit)

    :raise PreconditionViolated: when one of those diagrams fails
    """
    require(mixed_report(W), COM_DIAGRAMS + ("eta-unit",))
    sig = W.signature()
    kappa = kappa_cell(sig)
    results = {
        "kappa-delta": sig.check_equation(
            vert(sig.at("G", kappa), sig.at("", "delta", "F")),
            vert(sig.at("", "delta", "F"), kappa),
        ),
        "kappa-gamma-theta": sig.check_equation(
            kappa, sig.horizontal(gamma_cell(sig), theta_cell(sig))
        ),
    }
    return PropertyReport(MappingProxyType(results))
