"""
Pairings related to a regular one by splitting an idempotent

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

# Exact linear algebra
from ..linalg import LinMap, compose, identity, split_idempotent, tensor

# Pairing
from .constants import PreconditionViolated
from .dual_pairing import Direction, DualPairing, h_cell, k_cell, pairing_report

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class RelatedAdjunction:
    pairing: DualPairing
    """The split pairing"""

    p: LinMap
    i: LinMap
    """Splitting i·p of the idempotent, p·i = I"""

    adjunction: bool
    """The split pairing is an adjunction"""


def related_adjunction(P: DualPairing, side: Direction = Direction.ALPHA) -> RelatedAdjunction:
    """
    Split h = εL·Lη (α side) or k = Rε·ηR (β side) and move the pairing
    onto the image.

    On the α side L̲ = image of h, η̲ = Rp·η, ε̲ = ε·iR and β̲·α̲ = I.
    On the β side R̲ = image of k, η̲ = pL·η, ε̲ = ε·Li and α̲·β̲ = I.

    :param P: pairing with the matching component regular
    :param side: which component is regular
    :raise PreconditionViolated: when that component is not regular
    :raise SplittingUnsupported: over a ground ring that is not a field
    """
    side = Direction(side)
    report = pairing_report(P)
    sig = P.signature()
    I_a, I_b = identity(P.ring, P.a), identity(P.ring, P.b)

    if side is Direction.ALPHA:
        if not report.alpha_regular:
            raise PreconditionViolated("α·β·α = α")
        p, i = split_idempotent(sig.evaluate(h_cell(sig)))
        split = DualPairing(
            P.ring,
            p.rows,
            P.b,
            compose(tensor(I_b, p), P.eta),
            compose(P.eps, tensor(i, I_b)),
        )
    else:
        if not report.beta_regular:
            raise PreconditionViolated("β·α·β = β")
        p, i = split_idempotent(sig.evaluate(k_cell(sig)))
        split = DualPairing(
            P.ring,
            P.a,
            p.rows,
            compose(tensor(p, I_a), P.eta),
            compose(P.eps, tensor(I_a, i)),
        )
    return RelatedAdjunction(split, p, i, pairing_report(split).adjunction)
