"""
Repair constructions turning q-counital comonads into r-counital and weak ones

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

# Comonadics
from .coalgebra import ComonadClass, QCounitalCoalgebra, law_report_co
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


def delta_tilde(G: QCounitalCoalgebra) -> QCounitalCoalgebra:
    """
    δ̃ = GεG·Gδ·δ, i.e. c ↦ Σ c1 ⊗ ε(c2)c3

    :raise PreconditionViolated: when ε is not regular
    """
    if not law_report_co(G).counit_regular:
        raise PreconditionViolated("counit not regular")
    sig = G.signature()
    delta = sig.evaluate(
        vert(sig.at("G", "eps", "G"), sig.at("G", "delta"), sig.gen("delta"))
    )
    return QCounitalCoalgebra(G.ring, G.dim, delta, G.eps)


def eps_tilde(G: QCounitalCoalgebra) -> QCounitalCoalgebra:
    """
    ε̃ = ε·Gε·δ

    :raise PreconditionViolated: when δ is not compatible
    """
    if not law_report_co(G).comult_compatible:
        raise PreconditionViolated("δ not compatible")
    sig = G.signature()
    eps = sig.evaluate(vert(sig.gen("eps"), sig.at("G", "eps"), sig.gen("delta")))
    return QCounitalCoalgebra(G.ring, G.dim, G.delta, eps)


def delta_hat(G: QCounitalCoalgebra) -> QCounitalCoalgebra:
    """
    δ̂ = εGGε·GGδ·Gδ·δ, i.e. c ↦ Σ ε(c1)c2 ⊗ c3ε(c4)

    :raise PreconditionViolated: when G is not r-counital
    """
    if not law_report_co(G).classification.at_least(ComonadClass.R_COUNITAL):
        raise PreconditionViolated("not r-counital")
    sig = G.signature()
    delta = sig.evaluate(
        vert(
            sig.at("", "eps", "G G"),
            sig.at("G G G", "eps"),
            sig.at("G G", "delta"),
            sig.at("G", "delta"),
            sig.gen("delta"),
        )
    )
    return QCounitalCoalgebra(G.ring, G.dim, delta, G.eps)
