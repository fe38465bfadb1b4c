"""
Repair constructions turning q-unital monads into r-unital and weak ones

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

# Monadics
from .algebra import MonadClass, QUnitalAlgebra, law_report
from .constants import PreconditionViolated

# Diagram
from ..diagram import vert

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


#################
# CONSTRUCTIONS #
#################


def mu_tilde(F: QUnitalAlgebra) -> QUnitalAlgebra:
    """
    μ̃ = μ·Fμ·FηF, i.e. a⊗b ↦ a·e·b

    :param F: algebra with a regular quasi-unit
    :return: r-unital algebra with the same quasi-unit
    :raise PreconditionViolated: when η is not regular
    """
    if not law_report(F).unit_regular:
        raise PreconditionViolated("unit not regular")
    sig = F.signature()
    m = sig.evaluate(vert(sig.gen("mu"), sig.at("F", "mu"), sig.at("F", "eta", "F")))
    return QUnitalAlgebra(F.ring, F.dim, m, F.u)


def eta_tilde(F: QUnitalAlgebra) -> QUnitalAlgebra:
    """
    η̃ = μ·Fη·η, i.e. the quasi-unit e·e

    :raise PreconditionViolated: when μ is not compatible
    """
    if not law_report(F).mult_compatible:
        raise PreconditionViolated("μ not compatible")
    sig = F.signature()
    u = sig.evaluate(vert(sig.gen("mu"), sig.at("F", "eta"), sig.gen("eta")))
    return QUnitalAlgebra(F.ring, F.dim, F.m, u)


def mu_hat(F: QUnitalAlgebra) -> QUnitalAlgebra:
    """
    μ̂ = μ·μF·μFF·ηFFη, i.e. a⊗b ↦ e·a·b·e

    :param F: r-unital algebra
    :return: weak monad with the same quasi-unit
    :raise PreconditionViolated: when F is not r-unital
    """
    if not law_report(F).classification.at_least(MonadClass.R_UNITAL):
        raise PreconditionViolated("not r-unital")
    sig = F.signature()
    m = sig.evaluate(
        vert(
            sig.gen("mu"),
            sig.at("", "mu", "F"),
            sig.at("", "mu", "F F"),
            sig.at("", "eta", "F F F"),
            sig.at("F F", "eta"),
        )
    )
    return QUnitalAlgebra(F.ring, F.dim, m, F.u)
