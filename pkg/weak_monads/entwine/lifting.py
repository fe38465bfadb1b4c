"""
Lifting of functors to compatible modules and comodules

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
from typing import Dict, List, Mapping, Optional

# Exact linear algebra
from ..linalg import LinMap

# Diagram
from ..diagram import LawResult, Signature, vert

# Monadics and comonadics
from ..comonadics import (
    CoalgebraComodule,
    QCounitalCoalgebra,
    comodule_report,
    enumerate_compatible_comodules,
    gamma_cell,
)
from ..monadics import (
    AlgebraModule,
    PropertyReport,
    QUnitalAlgebra,
    enumerate_compatible_modules,
    module_report,
    theta_cell,
)

# Entwining
from .constants import LAWS, ORACLE_DIMS, PreconditionViolated
from .entwining import ComoduleEntwining, Entwining, ModuleEntwining, chi, normalize, zeta

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("Lifting")


##################
# LIFTING REPORT #
##################


@dataclass(frozen=True)
class LiftingReport:
    diagram_lift_equ: bool
    """The pentagon with the ϑ-insertion commutes"""

    equation_lift_equ_reg: bool
    weak_diagrams: bool
    """Rectangle and both triangles of the weak-monad correspondence"""

    results: Mapping[str, LawResult]

    @property
    def lifts(self) -> bool:
        """λ induces a lifting to the compatible (co)modules"""
        return self.diagram_lift_equ and self.equation_lift_equ_reg

    def flags(self) -> Dict[str, bool]:
        return {name: result.holds for name, result in self.results.items()}


def lifting_report_modules(E: ModuleEntwining) -> LiftingReport:
    """
    Decide whether λ: LT → TF lifts T to the compatible modules, and whether
    it satisfies the rectangle and triangles of the weak-monad correspondence

    :param E: module entwining
    """
    sig = E.signature()
    lam = sig.gen("lam")
    theta = sig.at("T", theta_cell(sig))
    theta_l = sig.at("", theta_cell(sig, "L", "muL", "etaL"), "T")
    results = {
        "lift-equ": sig.check_equation(
            vert(
                sig.at("T", "mu"),
                sig.at("", "lam", "F"),
                sig.at("L T", theta_cell(sig)),
                sig.at("L", "lam"),
            ),
            vert(theta, lam, sig.at("", "muL", "T")),
        ),
        "lift-equ-reg": sig.check_equation(vert(theta, lam, theta_l), vert(theta, lam)),
        "lift-rect": sig.check_equation(
            vert(sig.at("T", "mu"), sig.at("", "lam", "F"), sig.at("L", "lam")),
            vert(lam, sig.at("", "muL", "T")),
        ),
        "lift-left-triangle": sig.check_equation(vert(lam, theta_l), lam),
        "lift-right-triangle": sig.check_equation(vert(theta, lam), lam),
    }
    return LiftingReport(
        diagram_lift_equ=results["lift-equ"].holds,
        equation_lift_equ_reg=results["lift-equ-reg"].holds,
        weak_diagrams=all(
            results[name].holds
            for name in ("lift-rect", "lift-left-triangle", "lift-right-triangle")
        ),
        results=MappingProxyType(results),
    )


def lifting_report_comodules(E: ComoduleEntwining) -> LiftingReport:
    """
    Decide whether ψ: TG → HT lifts T to the compatible comodules, and
    whether it satisfies the rectangle and triangles of the weak-comonad
    correspondence

    :param E: comodule entwining
    """
    sig = E.signature()
    psi = sig.gen("psi")
    gamma = sig.at("T", gamma_cell(sig))
    gamma_h = sig.at("", gamma_cell(sig, "H", "deltaH", "epsH"), "T")
    results = {
        "lift-equ-co": sig.check_equation(
            vert(sig.at("", "deltaH", "T"), psi, gamma),
            vert(
                sig.at("H", "psi"),
                sig.at("H T", gamma_cell(sig)),
                sig.at("", "psi", "G"),
                sig.at("T", "delta"),
            ),
        ),
        "lift-equ-reg-co": sig.check_equation(vert(gamma_h, psi, gamma), vert(psi, gamma)),
        "colift-rect": sig.check_equation(
            vert(sig.at("", "deltaH", "T"), psi),
            vert(sig.at("H", "psi"), sig.at("", "psi", "G"), sig.at("T", "delta")),
        ),
        "colift-left-triangle": sig.check_equation(vert(psi, gamma), psi),
        "colift-right-triangle": sig.check_equation(vert(gamma_h, psi), psi),
    }
    return LiftingReport(
        diagram_lift_equ=results["lift-equ-co"].holds,
        equation_lift_equ_reg=results["lift-equ-reg-co"].holds,
        weak_diagrams=all(
            results[name].holds
            for name in ("colift-rect", "colift-left-triangle", "colift-right-triangle")
        ),
        results=MappingProxyType(results),
    )


# ------------------------------------------------------------------------------


###########
# LIFTING #
###########


def _module_signature(E: ModuleEntwining, M: AlgebraModule) -> Signature:
    return E.signature().extend({"A": M.dim}, [("phi", "F A", "A", M.rho)])


def _comodule_signature(E: ComoduleEntwining, M: CoalgebraComodule) -> Signature:
    return E.signature().extend({"B": M.dim}, [("ups", "B", "G B", M.upsilon)])


def _lifted_action(E: ModuleEntwining, M: AlgebraModule) -> LinMap:
    sig = _module_signature(E, M)
    return sig.evaluate(vert(sig.at("T", "phi"), sig.at("", "lam", "A")))


def _lifted_coaction(E: ComoduleEntwining, M: CoalgebraComodule) -> LinMap:
    sig = _comodule_signature(E, M)
    return sig.evaluate(vert(sig.at("", "psi", "B"), sig.at("T", "ups")))


def lift_module(E: ModuleEntwining, M: AlgebraModule) -> AlgebraModule:
    """
    (A, φ) ↦ (T(A), Tφ·λ_A)

    :param E: entwining inducing a lifting
    :param M: compatible F-module
    :return: compatible L-module on the carrier t·dim
    :raise PreconditionViolated: when λ does not lift or M is not compatible
    """
    report = lifting_report_modules(E)
    for name in ("lift-equ", "lift-equ-reg"):
        if not report.results[name]:
            raise PreconditionViolated(LAWS[name])
    checked = module_report(M)
    if not (checked.action_ok and checked.compatible):
        raise PreconditionViolated("module is not a compatible F-module")
    return AlgebraModule(E.L, E.t * M.dim, _lifted_action(E, M))


def lift_comodule(E: ComoduleEntwining, M: CoalgebraComodule) -> CoalgebraComodule:
    """
    (B, υ) ↦ (T(B), ψ_B·Tυ)

    :raise PreconditionViolated: when ψ does not lift or M is not compatible
    """
    report = lifting_report_comodules(E)
    for name in ("lift-equ-co", "lift-equ-reg-co"):
        if not report.results[name]:
            raise PreconditionViolated(LAWS[name])
    checked = comodule_report(M)
    if not (checked.coaction_ok and checked.compatible):
        raise PreconditionViolated("comodule is not a compatible G-comodule")
    return CoalgebraComodule(E.H, E.t * M.dim, _lifted_coaction(E, M))


def f_reg_report(E: ModuleEntwining, modules: List[AlgebraModule]) -> PropertyReport:
    """
    Tφ·λ_A = Tφ·λ_A·LTφ·LTη_A on every given compatible module,
    keyed "f-reg[index]"
    """
    results = {}
    for index, M in enumerate(modules):
        sig = _module_signature(E, M)
        lifted = vert(sig.at("T", "phi"), sig.at("", "lam", "A"))
        results[f"f-reg[{index}]"] = sig.check_equation(
            lifted, vert(lifted, sig.at("L T", "phi"), sig.at("L T", "eta", "A"))
        )
    return PropertyReport(MappingProxyType(results))


def f_reg_report_co(E: ComoduleEntwining, comodules: List[CoalgebraComodule]) -> PropertyReport:
    """ψ·Tυ = HTε·HTυ·ψ·Tυ on every given compatible comodule"""
    results = {}
    for index, M in enumerate(comodules):
        sig = _comodule_signature(E, M)
        lifted = vert(sig.at("", "psi", "B"), sig.at("T", "ups"))
        results[f"f-reg-co[{index}]"] = sig.check_equation(
            lifted, vert(sig.at("H T", "eps", "B"), sig.at("H T", "ups"), lifted)
        )
    return PropertyReport(MappingProxyType(results))


# ------------------------------------------------------------------------------


#################################
# FUNCTOR ACTIONS AND COACTIONS #
#################################


def _action_signature(L: QUnitalAlgebra, F: QUnitalAlgebra, t: int, rho: LinMap) -> Signature:
    sig = L.register(F.signature(), "L", "muL", "etaL")
    return sig.extend({"T": t}, [("rho", "L T F", "T F", rho)])


def functor_action_report(
    L: QUnitalAlgebra, F: QUnitalAlgebra, t: int, rho: LinMap
) -> Dict[str, LawResult]:
    """
    Action law, compatibility and F-linearity of ϱ: LTF → TF, the value of
    an L-module structure on TU_F at the free module (F, μ)
    """
    sig = _action_signature(L, F, t, rho)
    rho_cell = sig.gen("rho")
    mu_l = sig.at("", "muL", "T F")
    return {
        "functor-action": sig.check_equation(
            vert(rho_cell, sig.at("L", "rho")), vert(rho_cell, mu_l)
        ),
        "functor-action-compatible": sig.check_equation(
            rho_cell, vert(rho_cell, mu_l, sig.at("L", "etaL", "T F"))
        ),
        "functor-action-natural": sig.check_equation(
            vert(rho_cell, sig.at("L T", "mu")),
            vert(sig.at("T", "mu"), sig.at("", "rho", "F")),
        ),
    }


def _lambda_from_action(L: QUnitalAlgebra, F: QUnitalAlgebra, t: int, rho: LinMap) -> LinMap:
    sig = _action_signature(L, F, t, rho)
    return sig.evaluate(vert(sig.gen("rho"), sig.at("L T", "eta")))


def entwining_from_action(
    L: QUnitalAlgebra, F: QUnitalAlgebra, t: int, rho: LinMap
) -> ModuleEntwining:
    """
    λ = ϱF·LTη from a compatible L-module structure on TU_F

    :param L: target-side algebra
    :param F: source-side algebra
    :param t: carrier dimension of T
    :param rho: ϱ at the free module, a (t·f)×(l·t·f) map
    :raise PreconditionViolated: when ϱ is not a compatible, F-linear action
    """
    for name, result in functor_action_report(L, F, t, rho).items():
        if not result:
            raise PreconditionViolated(LAWS[name])
    return ModuleEntwining(L, F, t, _lambda_from_action(L, F, t, rho))


def _coaction_signature(
    G: QCounitalCoalgebra, H: QCounitalCoalgebra, t: int, upsilon: LinMap
) -> Signature:
    sig = H.register(G.signature(), "H", "deltaH", "epsH")
    return sig.extend({"T": t}, [("ups", "T G", "H T G", upsilon)])


def functor_coaction_report(
    G: QCounitalCoalgebra, H: QCounitalCoalgebra, t: int, upsilon: LinMap
) -> Dict[str, LawResult]:
    """Coaction law, compatibility and G-colinearity of υ: TG → HTG"""
    sig = _coaction_signature(G, H, t, upsilon)
    ups = sig.gen("ups")
    delta_h = sig.at("", "deltaH", "T G")
    return {
        "functor-coaction": sig.check_equation(vert(sig.at("H", "ups"), ups), vert(delta_h, ups)),
        "functor-coaction-compatible": sig.check_equation(
            ups, vert(sig.at("H", "epsH", "T G"), delta_h, ups)
        ),
        "functor-coaction-natural": sig.check_equation(
            vert(sig.at("H T", "delta"), ups),
            vert(sig.at("", "ups", "G"), sig.at("T", "delta")),
        ),
    }


def _psi_from_coaction(
    G: QCounitalCoalgebra, H: QCounitalCoalgebra, t: int, upsilon: LinMap
) -> LinMap:
    sig = _coaction_signature(G, H, t, upsilon)
    return sig.evaluate(vert(sig.at("H T", "eps"), sig.gen("ups")))


def entwining_from_coaction(
    G: QCounitalCoalgebra, H: QCounitalCoalgebra, t: int, upsilon: LinMap
) -> ComoduleEntwining:
    """
    ψ = HTε·υ from a compatible H-comodule structure on TU^G

    :raise PreconditionViolated: when υ is not a compatible, G-colinear coaction
    """
    for name, result in functor_coaction_report(G, H, t, upsilon).items():
        if not result:
            raise PreconditionViolated(LAWS[name])
    return ComoduleEntwining(G, H, t, _psi_from_coaction(G, H, t, upsilon))


# ------------------------------------------------------------------------------


#############
# ROUNDTRIP #
#############


@dataclass(frozen=True)
class RoundtripReport:
    action_ok: bool
    """The induced action (resp. coaction) passes the functor-level laws"""

    normalized_matches: bool
    """λ' recovered from χ is the normalized representative of λ"""

    stable: bool
    """A second pass reproduces λ'"""

    same_lifts: bool
    """λ and λ' lift every test (co)module to the same structure"""

    objects_checked: int
    witness: Optional[int] = None
    """Index of the first test (co)module lifted differently"""


def roundtrip_report(E: Entwining, dims: int = ORACLE_DIMS, cap: int = None) -> RoundtripReport:
    """
    λ → χ → λ' → χ' → λ'' and comparison of the liftings induced by λ and λ'
    over the compatible (co)modules of carrier dimension ≤ dims

    :param E: module or comodule entwining
    :param dims: largest test carrier
    :param cap: enumeration cap of the test family
    """
    if isinstance(E, ModuleEntwining):
        action = chi(E)
        action_ok = all(functor_action_report(E.L, E.F, E.t, action).values())
        first = ModuleEntwining(E.L, E.F, E.t, _lambda_from_action(E.L, E.F, E.t, action))
        second = _lambda_from_action(E.L, E.F, E.t, chi(first))
        normalized_matches = first.lam == normalize(E).lam
        stable = second == first.lam
        family = enumerate_compatible_modules(E.F, dims, cap)
        lifts = [(_lifted_action(E, M), _lifted_action(first, M)) for M in family]
    else:
        coaction = zeta(E)
        action_ok = all(functor_coaction_report(E.G, E.H, E.t, coaction).values())
        first = ComoduleEntwining(E.G, E.H, E.t, _psi_from_coaction(E.G, E.H, E.t, coaction))
        second = _psi_from_coaction(E.G, E.H, E.t, zeta(first))
        normalized_matches = first.psi == normalize(E).psi
        stable = second == first.psi
        family = enumerate_compatible_comodules(E.G, dims, cap)
        lifts = [(_lifted_coaction(E, M), _lifted_coaction(first, M)) for M in family]

    witness = next((index for index, (raw, rep) in enumerate(lifts) if raw != rep), None)
    if witness is not None:
        logger.warning(f"test object {witness} is lifted differently by the representative")
    return RoundtripReport(
        action_ok=action_ok,
        normalized_matches=normalized_matches,
        stable=stable,
        same_lifts=witness is None,
        objects_checked=len(lifts),
        witness=witness,
    )
