"""
Lifting the comonad to compatible modules and the monad to compatible comodules

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
from typing import Dict, Mapping, Optional, Tuple

# Exact linear algebra
from ..linalg import LinMap

# Diagram
from ..diagram import LawResult, Signature, vert

# Monadics and comonadics
from ..comonadics import gamma_bar_cell, gamma_cell
from ..monadics import PropertyReport, theta_bar_cell, theta_cell

# Mixed
from .constants import ORACLE_DIMS
from .distributive import (
    COM_DIAGRAMS,
    MON_DIAGRAMS,
    MixedDistributiveLaw,
    counit_consequences,
    kappa_cell,
    mixed_report,
    require,
    tau_cell,
    unit_consequences,
    xi_cell,
)
from .objects import (
    ComoduleObject,
    ModuleObject,
    comodule_family,
    comodule_morphism,
    comodule_signature,
    lift_to_f,
    lift_to_g,
    module_family,
    module_morphism,
    module_signature,
)

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("MixedLifting")


##################
# FAMILY REPORTS #
##################


@dataclass(frozen=True)
class LiftedReport:
    """Equations evaluated on every test object, keyed "name[index]" """

    objects_checked: int
    results: Mapping[str, LawResult]

    @property
    def holds(self) -> bool:
        return all(result.holds for result in self.results.values())

    def flags(self) -> Dict[str, bool]:
        return {name: result.holds for name, result in self.results.items()}

    def failures(self) -> Dict[str, LawResult]:
        return {name: result for name, result in self.results.items() if not result}


def check_sides(sig: Signature, sides: Tuple) -> LawResult:
    return sig.check_equation(*sides)


def _comonad_laws_at(sig: Signature, obj: str) -> Dict[str, LawResult]:
    delta = sig.at("", "delta", obj)
    eps = sig.at("", "eps", obj)
    gamma = sig.at("", gamma_cell(sig), obj)
    return {
        "coassoc": sig.check_equation(
            vert(sig.at("G", "delta", obj), delta), vert(sig.at("", "delta", f"G {obj}"), delta)
        ),
        "counit-regular": sig.check_equation(eps, vert(eps, gamma)),
        "counit-symmetric": sig.check_equation(gamma, sig.at("", gamma_bar_cell(sig), obj)),
        "comult-compatible": sig.check_equation(
            delta,
            vert(sig.at("G", "eps", f"G {obj}"), sig.at("", "delta", f"G {obj}"), delta),
        ),
    }


def _monad_laws_at(sig: Signature, obj: str) -> Dict[str, LawResult]:
    mu = sig.at("", "mu", obj)
    eta = sig.at("", "eta", obj)
    theta = sig.at("", theta_cell(sig), obj)
    return {
        "assoc": sig.check_equation(
            vert(mu, sig.at("F", "mu", obj)), vert(mu, sig.at("", "mu", f"F {obj}"))
        ),
        "unit-regular": sig.check_equation(eta, vert(theta, eta)),
        "unit-symmetric": sig.check_equation(theta, sig.at("", theta_bar_cell(sig), obj)),
        "mult-compatible": sig.check_equation(
            mu, vert(mu, sig.at("", "mu", f"F {obj}"), sig.at("F", "eta", f"F {obj}"))
        ),
    }


def indexed(results: Dict[str, LawResult], index: int) -> Dict[str, LawResult]:
    return {f"{name}[{index}]": result for name, result in results.items()}


# ------------------------------------------------------------------------------


###########
# LIFTING #
###########


def lift_comonad_to_modules(
    W: MixedDistributiveLaw, dims: int = ORACLE_DIMS, cap: int = None
) -> LiftedReport:
    """
    Ḡ(A, φ) = (G(A), Gφ·ω_A) with δ_A and ε_A, checked as a weak comonad on
    every compatible F-module of carrier dimension ≤ dims

    :param W: mixed distributive law
    :raise PreconditionViolated: when a monad or comonad diagram or (cond-ve) fails
    """
    require(mixed_report(W), MON_DIAGRAMS + COM_DIAGRAMS + ("cond-ve",))
    family = module_family(W, dims, cap)
    results: Dict[str, LawResult] = {}
    for index, M in enumerate(family):
        sig = module_signature(W, M)
        A = ModuleObject("A", sig.gen("phi"))
        GA = lift_to_g(sig, A)
        GGA = lift_to_g(sig, GA)
        laws = {
            "lifted-action": sig.check_equation(
                vert(GA.action, sig.at("F", GA.action)),
                vert(GA.action, sig.at("", "mu", GA.obj)),
            ),
            "lifted-action-compatible": sig.check_equation(
                GA.action,
                vert(GA.action, sig.at("", "mu", GA.obj), sig.at("F", "eta", GA.obj)),
            ),
            "coproduct-morphism": check_sides(
                sig, module_morphism(sig, sig.at("", "delta", "A"), GA, GGA)
            ),
            "counit-morphism": check_sides(sig, module_morphism(sig, sig.at("", "eps", "A"), GA, A)),
        }
        laws.update(_comonad_laws_at(sig, "A"))
        results.update(indexed(laws, index))
    logger.info(f"lifted the comonad to {len(family)} compatible modules")
    return LiftedReport(len(family), MappingProxyType(results))


def lift_monad_to_comodules(
    W: MixedDistributiveLaw, dims: int = ORACLE_DIMS, cap: int = None
) -> LiftedReport:
    """
    F̂(B, υ) = (F(B), ω_B·Fυ) with μ_B and η_B, checked as a weak monad on
    every compatible G-comodule of carrier dimension ≤ dims

    :raise PreconditionViolated: when a monad or comonad diagram or (eta-unit) fails
    """
    require(mixed_report(W), MON_DIAGRAMS + COM_DIAGRAMS + ("eta-unit",))
    family = comodule_family(W, dims, cap)
    results: Dict[str, LawResult] = {}
    for index, M in enumerate(family):
        sig = comodule_signature(W, M)
        B = ComoduleObject("B", sig.gen("ups"))
        FB = lift_to_f(sig, B)
        FFB = lift_to_f(sig, FB)
        delta_fb = sig.at("", "delta", FB.obj)
        laws = {
            "lifted-coaction": sig.check_equation(
                vert(sig.at("G", FB.coaction), FB.coaction), vert(delta_fb, FB.coaction)
            ),
            "lifted-coaction-compatible": sig.check_equation(
                FB.coaction, vert(sig.at("G", "eps", FB.obj), delta_fb, FB.coaction)
            ),
            "product-comorphism": check_sides(
                sig, comodule_morphism(sig, sig.at("", "mu", "B"), FFB, FB)
            ),
            "unit-comorphism": check_sides(
                sig, comodule_morphism(sig, sig.at("", "eta", "B"), B, FB)
            ),
        }
        laws.update(_monad_laws_at(sig, "B"))
        results.update(indexed(laws, index))
    logger.info(f"lifted the monad to {len(family)} compatible comodules")
    return LiftedReport(len(family), MappingProxyType(results))


# ------------------------------------------------------------------------------


#############################
# PRE-COUNITS AND PRE-UNITS #
#############################


@dataclass(frozen=True)
class PreUnitReport:
    """
    One statement per object of the test family, one on the free object and
    one diagram; they are expected to agree
    """

    object_statement: bool
    free_statement: bool
    diagram: bool
    results: Mapping[str, LawResult]
    consequences: Optional[PropertyReport] = None
    """Identities that follow when the diagram commutes"""

    @property
    def agrees(self) -> bool:
        return self.object_statement == self.free_statement == self.diagram


def pre_counit_report(
    W: MixedDistributiveLaw, dims: int = ORACLE_DIMS, cap: int = None
) -> PreUnitReport:
    """
    ε_A is an F-module morphism for every compatible module; εF is an
    F-morphism; (cond-ve) commutes

    :raise PreconditionViolated: when a monad diagram fails
    """
    report = mixed_report(W)
    require(report, MON_DIAGRAMS)
    results: Dict[str, LawResult] = {}
    for index, M in enumerate(module_family(W, dims, cap)):
        sig = module_signature(W, M)
        A = ModuleObject("A", sig.gen("phi"))
        results[f"counit-morphism[{index}]"] = check_sides(
            sig, module_morphism(sig, sig.at("", "eps", "A"), lift_to_g(sig, A), A)
        )
    sig = W.signature()
    free = ModuleObject("F", sig.gen("mu"))
    results["pre-counit-free"] = check_sides(
        sig, module_morphism(sig, sig.at("", "eps", "F"), lift_to_g(sig, free), free)
    )
    results["cond-ve"] = report.results["cond-ve"]
    return PreUnitReport(
        object_statement=all(
            result.holds for name, result in results.items() if name.startswith("counit-")
        ),
        free_statement=results["pre-counit-free"].holds,
        diagram=report.cond_ve,
        results=MappingProxyType(results),
        consequences=counit_consequences(W) if report.cond_ve else None,
    )


def pre_unit_report(
    W: MixedDistributiveLaw, dims: int = ORACLE_DIMS, cap: int = None
) -> PreUnitReport:
    """
    η_B is a G-comodule morphism for every compatible comodule; ηG is
    G-colinear; (eta-unit) commutes

    :raise PreconditionViolated: when a comonad diagram fails
    """
    report = mixed_report(W)
    require(report, COM_DIAGRAMS)
    results: Dict[str, LawResult] = {}
    for index, M in enumerate(comodule_family(W, dims, cap)):
        sig = comodule_signature(W, M)
        B = ComoduleObject("B", sig.gen("ups"))
        results[f"unit-comorphism[{index}]"] = check_sides(
            sig, comodule_morphism(sig, sig.at("", "eta", "B"), B, lift_to_f(sig, B))
        )
    sig = W.signature()
    free = ComoduleObject("G", sig.gen("delta"))
    results["pre-unit-free"] = check_sides(
        sig, comodule_morphism(sig, sig.at("", "eta", "G"), free, lift_to_f(sig, free))
    )
    results["eta-unit"] = report.results["eta-unit"]
    return PreUnitReport(
        object_statement=all(
            result.holds for name, result in results.items() if name.startswith("unit-")
        ),
        free_statement=results["pre-unit-free"].holds,
        diagram=report.eta_unit,
        results=MappingProxyType(results),
        consequences=unit_consequences(W) if report.eta_unit else None,
    )


# ------------------------------------------------------------------------------


#################################
# ALTERNATIVE COUNITS AND UNITS #
#################################


@dataclass(frozen=True)
class AltUnitReport:
    diagram: bool
    """(counit-2), resp. (unit-2)"""

    maps: Tuple[LinMap, ...]
    """ε̄_A per test module, resp. η̂_B per test comodule"""

    results: Mapping[str, LawResult]
    consequence: Optional[LawResult] = None
    """τ̂ = μG·Fτ̂·FηG, resp. κ̂ = GεF·Gκ̂·δF, when the diagram commutes"""

    witness: Optional[int] = None
    """First test object on which the morphism property fails"""

    @property
    def agrees(self) -> bool:
        return (self.witness is None) == self.diagram


def _first_failure(results: Mapping[str, LawResult]) -> Optional[int]:
    for index, result in enumerate(results.values()):
        if not result:
            return index
    return None


def alt_counit(
    W: MixedDistributiveLaw, dims: int = ORACLE_DIMS, cap: int = None
) -> AltUnitReport:
    """
    ε̄_A = φ·ξ_A on every compatible module and whether it is an F-module
    morphism Ḡ(A) → A

    :raise PreconditionViolated: when a monad diagram fails
    """
    report = mixed_report(W)
    require(report, MON_DIAGRAMS)
    maps, results = [], {}
    for index, M in enumerate(module_family(W, dims, cap)):
        sig = module_signature(W, M)
        A = ModuleObject("A", sig.gen("phi"))
        eps_bar = vert(A.action, xi_cell(sig, "A"))
        maps.append(sig.evaluate(eps_bar))
        results[f"eps-bar-morphism[{index}]"] = check_sides(
            sig, module_morphism(sig, eps_bar, lift_to_g(sig, A), A)
        )

    consequence = None
    if report.counit_2:
        sig = W.signature()
        tau = tau_cell(sig)
        consequence = sig.check_equation(
            tau, vert(sig.at("", "mu", "G"), sig.at("F", tau), sig.at("F", "eta", "G"))
        )
    witness = _first_failure(results)
    if witness is not None:
        logger.info(f"ε̄ is not a module morphism on test module {witness}")
    return AltUnitReport(
        report.counit_2, tuple(maps), MappingProxyType(results), consequence, witness
    )


def alt_unit(
    W: MixedDistributiveLaw, dims: int = ORACLE_DIMS, cap: int = None
) -> AltUnitReport:
    """
    η̂_B = ξ_B·υ on every compatible comodule and whether it is a G-comodule
    morphism B → F̂(B)

    :raise PreconditionViolated: when a comonad diagram fails
    """
    report = mixed_report(W)
    require(report, COM_DIAGRAMS)
    maps, results = [], {}
    for index, M in enumerate(comodule_family(W, dims, cap)):
        sig = comodule_signature(W, M)
        B = ComoduleObject("B", sig.gen("ups"))
        eta_hat = vert(xi_cell(sig, "B"), B.coaction)
        maps.append(sig.evaluate(eta_hat))
        results[f"eta-hat-comorphism[{index}]"] = check_sides(
            sig, comodule_morphism(sig, eta_hat, B, lift_to_f(sig, B))
        )

    consequence = None
    if report.unit_2:
        sig = W.signature()
        kappa = kappa_cell(sig)
        consequence = sig.check_equation(
            kappa, vert(sig.at("G", "eps", "F"), sig.at("G", kappa), sig.at("", "delta", "F"))
        )
    witness = _first_failure(results)
    if witness is not None:
        logger.info(f"η̂ is not a comodule morphism on test comodule {witness}")
    return AltUnitReport(
        report.unit_2, tuple(maps), MappingProxyType(results), consequence, witness
    )
