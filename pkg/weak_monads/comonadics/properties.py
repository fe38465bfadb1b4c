"""
Consequences of regularity, compatibility and of being a weak comonad

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
from types import MappingProxyType
from typing import Iterable

# Diagram
from ..diagram import vert

# Monadics
from ..monadics import PropertyReport

# Comonadics
from .coalgebra import (
    CoalgebraComodule,
    ComonadClass,
    QCounitalCoalgebra,
    comodule_report,
    gamma_bar_cell,
    gamma_cell,
    law_report_co,
)
from .constants import PreconditionViolated

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


def regularity_consequences_co(G: QCounitalCoalgebra) -> PropertyReport:
    """
    γ and γ̲ idempotent and absorbed by ε when ε is regular; γγ̲·δ = δ
    when δ is compatible
    """
    report = law_report_co(G)
    sig = G.signature()
    gamma, gamma_bar, eps = gamma_cell(sig), gamma_bar_cell(sig), sig.gen("eps")
    results = {}
    if report.counit_regular:
        results["gamma-idempotent"] = sig.check_equation(vert(gamma, gamma), gamma)
        results["gamma-bar-idempotent"] = sig.check_equation(
            vert(gamma_bar, gamma_bar), gamma_bar
        )
        results["counit-fixes-gamma"] = sig.check_equation(vert(eps, gamma), eps)
        results["counit-fixes-gamma-bar"] = sig.check_equation(vert(eps, gamma_bar), eps)
    if report.comult_compatible:
        results["comult-absorbs-gamma"] = sig.check_equation(
            vert(sig.horizontal(gamma, gamma_bar), sig.gen("delta")), sig.gen("delta")
        )
    return PropertyReport(MappingProxyType(results))


def weak_comonad_properties(
    G: QCounitalCoalgebra, comodules: Iterable[CoalgebraComodule] = ()
) -> PropertyReport:
    """
    γ is a morphism of q-counital comonads; for every compatible comodule
    υ = υ·ε_B·υ and ε_B·υ is an idempotent G-morphism

    :raise PreconditionViolated: when G is not a weak comonad or a comodule
        is not compatible
    """
    if law_report_co(G).classification is not ComonadClass.WEAK:
        raise PreconditionViolated("not a weak comonad")
    sig = G.signature()
    gamma, delta, eps = gamma_cell(sig), sig.gen("delta"), sig.gen("eps")
    results = {
        "gamma-coproduct": sig.check_equation(
            vert(sig.horizontal(gamma, gamma), delta), vert(delta, gamma)
        ),
        "gamma-counit": sig.check_equation(eps, vert(eps, gamma)),
    }

    for index, comodule in enumerate(comodules):
        if comodule.coalgebra != G:
            raise PreconditionViolated("comodule over another coalgebra")
        if not comodule_report(comodule).compatible:
            raise PreconditionViolated("υ = Gε_B·δ_B·υ")
        csig = comodule.signature()
        ups = csig.gen("ups")
        section = vert(csig.at("", "eps", "B"), ups)
        results[f"coaction-regular[{index}]"] = csig.check_equation(
            ups, vert(ups, section)
        )
        results[f"section-idempotent[{index}]"] = csig.check_equation(
            vert(section, section), section
        )
        results[f"section-morphism[{index}]"] = csig.check_equation(
            vert(ups, section), vert(csig.at("G", section), ups)
        )
    return PropertyReport(MappingProxyType(results))
