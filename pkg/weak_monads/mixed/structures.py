"""
Comonad on compatible modules and monad on compatible comodules

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
from typing import Dict, Mapping, Tuple

# Exact linear algebra
from ..linalg import LinMap

# Diagram
from ..diagram import LawResult, vert

# Mixed
from .constants import ORACLE_DIMS
from .distributive import (
    COM_DIAGRAMS,
    MON_DIAGRAMS,
    MixedDistributiveLaw,
    kappa_cell,
    mixed_report,
    require,
    tau_cell,
    xi_cell,
)
from .lifting import check_sides, indexed
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


logger = WeakLogger.get_logger("MixedStructures")

R_COUNITAL_LAWS = (
    "coassoc",
    "counit-regular",
    "comult-compatible",
    "coproduct-morphism",
    "eps-bar-morphism",
)

R_UNITAL_LAWS = (
    "assoc",
    "unit-regular",
    "mult-compatible",
    "product-comorphism",
    "eta-hat-comorphism",
)


def _all(results: Mapping[str, LawResult], names: Tuple[str, ...]) -> bool:
    return all(result.holds for key, result in results.items() if key.split("[")[0] in names)


# ------------------------------------------------------------------------------


######################
# COMONAD ON MODULES #
######################


@dataclass(frozen=True)
class ModuleComonad:
    delta_bar_free: LinMap
    """δ̄F = Gκ̂·δF: GF → GGF"""

    delta_bar: Tuple[LinMap, ...]
    """δ̄_A per test module"""

    eps_bar: Tuple[LinMap, ...]
    r_counital: bool
    weak: bool
    formulas_agree: bool
    """δ̄_A = δ_A·κ̂_A on every test module"""

    eta_unit: bool
    results: Mapping[str, LawResult]


def comonad_on_modules(
    W: MixedDistributiveLaw, dims: int = ORACLE_DIMS, cap: int = None
) -> ModuleComonad:
    """
    (Ḡ, δ̄, ε̄) on the compatible F-modules, δ̄_A = Gκ̂_A·δ_A and ε̄_A = φ·ξ_A,
    with κ̂_A obtained from κ̂ by putting φ in place of μ

    :param W: mixed distributive law
    :param dims: largest test module carrier
    :param cap: enumeration cap of the test family
    :raise PreconditionViolated: when a monad or comonad diagram or (counit-2) fails
    """
    report = mixed_report(W)
    require(report, MON_DIAGRAMS + COM_DIAGRAMS + ("counit-2",))
    sig = W.signature()
    delta_bar_free = sig.evaluate(vert(sig.at("G", kappa_cell(sig)), sig.at("", "delta", "F")))

    deltas, counits, results = [], [], {}
    for index, M in enumerate(module_family(W, dims, cap)):
        sig = module_signature(W, M)
        A = ModuleObject("A", sig.gen("phi"))
        GA = lift_to_g(sig, A)
        GGA = lift_to_g(sig, GA)

        kappa = kappa_cell(sig, A.obj, A.action)
        delta = vert(sig.at("G", kappa), sig.at("", "delta", A.obj))
        delta_g = vert(sig.at("G", kappa_cell(sig, GA.obj, GA.action)), sig.at("", "delta", GA.obj))
        eps = vert(A.action, xi_cell(sig, A.obj))
        eps_g = vert(GA.action, xi_cell(sig, GA.obj))
        gamma = vert(sig.at("G", eps), delta)

        laws = {
            "coassoc": sig.check_equation(vert(sig.at("G", delta), delta), vert(delta_g, delta)),
            "counit-regular": sig.check_equation(eps, vert(eps, gamma)),
            "comult-compatible": sig.check_equation(
                delta, vert(sig.at("G", eps_g), delta_g, delta)
            ),
            "coproduct-morphism": check_sides(sig, module_morphism(sig, delta, GA, GGA)),
            "eps-bar-morphism": check_sides(sig, module_morphism(sig, eps, GA, A)),
            "counit-symmetric": sig.check_equation(gamma, vert(eps_g, delta)),
            "delta-bar-alternative": sig.check_equation(
                delta, vert(sig.at("", "delta", A.obj), kappa)
            ),
        }
        deltas.append(sig.evaluate(delta))
        counits.append(sig.evaluate(eps))
        results.update(indexed(laws, index))

    r_counital = _all(results, R_COUNITAL_LAWS)
    formulas_agree = _all(results, ("delta-bar-alternative",))
    if report.eta_unit and not formulas_agree:
        logger.warning("δ̄ and δ·κ̂ differ although (eta-unit) commutes")
    elif not report.eta_unit and formulas_agree:
        logger.info("no module separates δ̄ from δ·κ̂ at this scale")
    return ModuleComonad(
        delta_bar_free=delta_bar_free,
        delta_bar=tuple(deltas),
        eps_bar=tuple(counits),
        r_counital=r_counital,
        weak=r_counital and _all(results, ("counit-symmetric",)),
        formulas_agree=formulas_agree,
        eta_unit=report.eta_unit,
        results=MappingProxyType(results),
    )


# ------------------------------------------------------------------------------


######################
# MONAD ON COMODULES #
######################


@dataclass(frozen=True)
class ComoduleMonad:
    mu_mixed_free: LinMap
    """μG·Fτ̂: FFG → FG"""

    mu_mixed: Tuple[LinMap, ...]
    """Product on F̂(B) per test comodule"""

    eta_hat: Tuple[LinMap, ...]
    r_unital: bool
    weak: bool
    formulas_agree: bool
    """μ_B·Fτ̂_B = τ̂_B·μ_B on every test comodule"""

    cond_ve: bool
    results: Mapping[str, LawResult]


def monad_on_comodules(
    W: MixedDistributiveLaw, dims: int = ORACLE_DIMS, cap: int = None
) -> ComoduleMonad:
    """
    (F̂, μ̂, η̂) on the compatible G-comodules, μ̂_B = μ_B·Fτ̂_B and
    η̂_B = ξ_B·υ, with τ̂_B obtained from τ̂ by putting υ in place of δ

    :raise PreconditionViolated: when a monad or comonad diagram or (unit-2) fails
    """
    report = mixed_report(W)
    require(report, MON_DIAGRAMS + COM_DIAGRAMS + ("unit-2",))
    sig = W.signature()
    mu_mixed_free = sig.evaluate(vert(sig.at("", "mu", "G"), sig.at("F", tau_cell(sig))))

    products, units, results = [], [], {}
    for index, M in enumerate(comodule_family(W, dims, cap)):
        sig = comodule_signature(W, M)
        B = ComoduleObject("B", sig.gen("ups"))
        FB = lift_to_f(sig, B)
        FFB = lift_to_f(sig, FB)

        tau = tau_cell(sig, B.obj, B.coaction)
        mu = vert(sig.at("", "mu", B.obj), sig.at("F", tau))
        mu_f = vert(sig.at("", "mu", FB.obj), sig.at("F", tau_cell(sig, FB.obj, FB.coaction)))
        eta = vert(xi_cell(sig, B.obj), B.coaction)
        eta_f = vert(xi_cell(sig, FB.obj), FB.coaction)
        theta = vert(mu, sig.at("F", eta))

        laws = {
            "assoc": sig.check_equation(vert(mu, sig.at("F", mu)), vert(mu, mu_f)),
            "unit-regular": sig.check_equation(eta, vert(theta, eta)),
            "mult-compatible": sig.check_equation(mu, vert(mu, mu_f, sig.at("F", eta_f))),
            "product-comorphism": check_sides(sig, comodule_morphism(sig, mu, FFB, FB)),
            "eta-hat-comorphism": check_sides(sig, comodule_morphism(sig, eta, B, FB)),
            "unit-symmetric": sig.check_equation(theta, vert(mu, eta_f)),
            "mu-mixed-alternative": sig.check_equation(
                mu, vert(tau, sig.at("", "mu", B.obj))
            ),
        }
        products.append(sig.evaluate(mu))
        units.append(sig.evaluate(eta))
        results.update(indexed(laws, index))

    r_unital = _all(results, R_UNITAL_LAWS)
    formulas_agree = _all(results, ("mu-mixed-alternative",))
    if report.cond_ve and not formulas_agree:
        logger.warning("μ̂ and τ̂·μ differ although (cond-ve) commutes")
    elif not report.cond_ve and formulas_agree:
        logger.info("no comodule separates μ̂ from τ̂·μ at this scale")
    return ComoduleMonad(
        mu_mixed_free=mu_mixed_free,
        mu_mixed=tuple(products),
        eta_hat=tuple(units),
        r_unital=r_unital,
        weak=r_unital and _all(results, ("unit-symmetric",)),
        formulas_agree=formulas_agree,
        cond_ve=report.cond_ve,
        results=MappingProxyType(results),
    )
