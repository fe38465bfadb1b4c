"""
Hom-set oracle for dual pairings

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
from itertools import product

# Exact linear algebra
from ..linalg import check_cap, count_maps, enumerate_maps

# Monadics
from ..monadics import OracleReport

# Pairing
from .constants import ORACLE_DIMS
from .dual_pairing import DualPairing, alpha_map, beta_map, pairing_report

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("HomsetOracle")


def homset_oracle(P: DualPairing, dims: int = ORACLE_DIMS, cap: int = None) -> OracleReport:
    """
    Check α = α·β·α and β = β·α·β on every morphism between the test
    objects A', B' ∈ {R^0, …, R^dims}, and compare with the flags that
    pairing_report decides on the identities alone

    :param P: pairing over a Z_n ring
    :param dims: largest test object dimension
    :param cap: enumeration cap for each hom-set
    :raise EnumerationCapExceeded: when a hom-set exceeds the cap
    """
    report = pairing_report(P)
    alpha_ok = beta_ok = True
    counterexample = None
    pairs = 0

    for a_dim, b_dim in product(range(dims + 1), repeat=2):
        pairs += 1
        check_cap(
            count_maps(P.a * a_dim, b_dim, P.ring) + count_maps(a_dim, P.b * b_dim, P.ring),
            cap,
        )

        def alpha(f):
            return alpha_map(P, f, a_dim, b_dim)

        def beta(g):
            return beta_map(P, g, a_dim, b_dim)

        if alpha_ok:
            for f in enumerate_maps(P.a * a_dim, b_dim, P.ring, cap):
                if alpha(f) != alpha(beta(alpha(f))):
                    alpha_ok = False
                    counterexample = f"α fails on L(R^{a_dim}) → R^{b_dim}"
                    break
        if beta_ok:
            for g in enumerate_maps(a_dim, P.b * b_dim, P.ring, cap):
                if beta(g) != beta(alpha(beta(g))):
                    beta_ok = False
                    counterexample = counterexample or f"β fails on R^{a_dim} → R(R^{b_dim})"
                    break

    oracle = OracleReport(
        domain_ok=True,
        alpha_regular=alpha_ok,
        beta_regular=beta_ok,
        flags_regular=report.regular,
        pairs_checked=pairs,
        counterexample=counterexample,
        alpha_flag=report.alpha_regular,
        beta_flag=report.beta_regular,
    )
    if not oracle.agrees:
        logger.warning(f"hom-set scan disagrees with the identity flags: {counterexample}")
    return oracle
