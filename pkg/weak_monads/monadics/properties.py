"""
Consequences of regularity, compatibility and of being a weak monad

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

# Diagram
from ..diagram import LawResult, vert

# Monadics
from .algebra import (
    AlgebraModule,
    MonadClass,
    QUnitalAlgebra,
    law_report,
    module_report,
    theta_bar_cell,
    theta_cell,
)
from .constants import PreconditionViolated

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


##########
# REPORT #
##########


@dataclass(frozen=True)
class PropertyReport:
    """Named equations that are expected to hold"""

    results: Mapping[str, LawResult]

    @property
    def holds(self) -> bool:
        return all(result.holds for result in self.results.values())

    def flags(self) -> Dict[str, bool]:
        return {name: result.holds for name, result in self.results.items()}

    def failures(self) -> Dict[str, LawResult]:
        return {name: result for name, result in self.results.items() if not result}


# ------------------------------------------------------------------------------


##############
# PROPERTIES #
##############


def regularity_consequences(F: QUnitalAlgebra) -> PropertyReport:
    """
    ϑ and ϑ̲ idempotent fixing η when η is regular; μ·ϑϑ̲ = μ when μ is
    compatible. Only the identities whose hypothesis holds are reported.
    """
    report = law_report(F)
    sig = F.signature()
    theta, theta_bar, eta = theta_cell(sig), theta_bar_cell(sig), sig.gen("eta")
    results = {}
    if report.unit_regular:
        results["theta-idempotent"] = sig.check_equation(vert(theta, theta), theta)
        results["theta-bar-idempotent"] = sig.check_equation(
            vert(theta_bar, theta_bar), theta_bar
        )
        results["theta-fixes-unit"] = sig.check_equation(vert(theta, eta), eta)
        results["theta-bar-fixes-unit"] = sig.check_equation(vert(theta_bar, eta), eta)
    if report.mult_compatible:
        results["mult-absorbs-theta"] = sig.check_equation(
            vert(sig.gen("mu"), sig.horizontal(theta, theta_bar)), sig.gen("mu")
        )
    return PropertyReport(MappingProxyType(results))


def weak_monad_properties(
    F: QUnitalAlgebra, modules: Iterable[AlgebraModule] = ()
) -> PropertyReport:
    """
    ϑ is a morphism of q-unital monads; for every compatible module
    ϱ = ϱ·η_A·ϱ and ϱ·η_A is an idempotent F-morphism

    :param F: weak monad
    :param modules: compatible F-modules, flags are suffixed with their index
    :raise PreconditionViolated: when F is not a weak monad or a module is
        not compatible
    """
    if law_report(F).classification is not MonadClass.WEAK:
        raise PreconditionViolated("not a weak monad")
    sig = F.signature()
    theta, mu, eta = theta_cell(sig), sig.gen("mu"), sig.gen("eta")
    results = {
        "theta-product": sig.check_equation(
            vert(mu, sig.horizontal(theta, theta)), vert(theta, mu)
        ),
        "theta-unit": sig.check_equation(eta, vert(theta, eta)),
    }

    for index, module in enumerate(modules):
        if module.algebra != F:
            raise PreconditionViolated("module over another algebra")
        if not module_report(module).compatible:
            raise PreconditionViolated("ϱ = ϱ·μ_A·Fη_A")
        msig = module.signature()
        phi = msig.gen("phi")
        retraction = vert(phi, msig.at("", "eta", "A"))
        results[f"action-regular[{index}]"] = msig.check_equation(
            phi, vert(retraction, phi)
        )
        results[f"retraction-idempotent[{index}]"] = msig.check_equation(
            vert(retraction, retraction), retraction
        )
        results[f"retraction-morphism[{index}]"] = msig.check_equation(
            vert(retraction, phi), vert(phi, msig.at("F", retraction))
        )
    return PropertyReport(MappingProxyType(results))
