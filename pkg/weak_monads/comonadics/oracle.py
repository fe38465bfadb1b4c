"""
Hom-set oracle for the forgetful/cofree pairing of a q-counital comonad

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
from typing import List, Optional

# Exact linear algebra
from ..linalg import LinMap, check_cap, compose, count_maps, enumerate_maps, identity, tensor

# Monadics
from ..monadics import OracleReport

# Comonadics
from .coalgebra import (
    CoalgebraComodule,
    QCounitalCoalgebra,
    comodule_report,
    free_comodule,
    law_report_co,
)
from .constants import ORACLE_DIMS
from .enumeration import enumerate_compatible_comodules

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("ComoduleOracle")


def _test_family(
    G: QCounitalCoalgebra, dims: int, cap: Optional[int]
) -> List[CoalgebraComodule]:
    family = enumerate_compatible_comodules(G, dims, cap)
    free = free_comodule(G, 1)
    report = comodule_report(free)
    if report.coaction_ok and report.compatible and not any(
        comodule.dim == free.dim and comodule.upsilon == free.upsilon for comodule in family
    ):
        family.append(free)
    return family


def comodule_pairing_oracle(
    G: QCounitalCoalgebra, dims: int = ORACLE_DIMS, cap: int = None
) -> OracleReport:
    """
    Scan α(f) = G(f)·υ and β(g) = ε_A·g over every compatible comodule B,
    every test object A = R^d, d ≤ dims, and every morphism between them

    :param G: coalgebra housing the comonad
    :param dims: largest test object and comodule dimension
    :param cap: enumeration cap for each hom-set
    :return: pointwise regularity compared with counit_regular ∧ comult_compatible
    """
    ring, c = G.ring, G.dim
    report = law_report_co(G)
    flags_regular = report.counit_regular and report.comult_compatible

    domain_ok = comodule_report(free_comodule(G, 1)).compatible
    alpha_ok = beta_ok = True
    counterexample = None
    pairs = 0
    family = _test_family(G, dims, cap)

    for d in range(dims + 1):
        counit = tensor(G.eps, identity(ring, d))
        comult = tensor(G.delta, identity(ring, d))
        for B in family:
            pairs += 1
            check_cap(count_maps(B.dim, d, ring) + count_maps(B.dim, c * d, ring), cap)

            def alpha(f: LinMap) -> LinMap:
                return compose(tensor(identity(ring, c), f), B.upsilon)

            def beta(g: LinMap) -> LinMap:
                return compose(counit, g)

            for f in enumerate_maps(B.dim, d, ring, cap):
                if alpha_ok and alpha(f) != alpha(beta(alpha(f))):
                    alpha_ok = False
                    counterexample = f"α fails on comodule of dim {B.dim} → R^{d}"
            for g in enumerate_maps(B.dim, c * d, ring, cap):
                # G-morphisms B → φ^G(A) only
                if compose(comult, g) != compose(tensor(identity(ring, c), g), B.upsilon):
                    continue
                if beta_ok and beta(g) != beta(alpha(beta(g))):
                    beta_ok = False
                    counterexample = counterexample or (
                        f"β fails on comodule of dim {B.dim} → R^{d}"
                    )

    oracle = OracleReport(domain_ok, alpha_ok, beta_ok, flags_regular, pairs, counterexample)
    if not oracle.agrees:
        logger.warning(
            f"pointwise regularity {oracle.pointwise_regular} "
            f"disagrees with the flags {flags_regular}"
        )
    return oracle


# ------------------------------------------------------------------------------


#######################
# COACTION ON FUNCTOR #
#######################


@dataclass(frozen=True)
class CoactionOnFunctorReport:
    comodule: bool
    compatible: bool
    lifted: Optional[CoalgebraComodule]
    """The factorization T̄ through the compatible comodules, when it exists"""


def comodule_action_on_functor_check(
    G: QCounitalCoalgebra, t: int, upsilon: LinMap
) -> CoactionOnFunctorReport:
    """
    A G-coaction on the functor T⊗– is a coaction of G on the carrier
    of T; when it is a compatible one, T factors through the compatible
    comodules

    :raise InvalidStructure: on a dimension mismatch
    """
    comodule = CoalgebraComodule(G, t, upsilon)
    report = comodule_report(comodule)
    lifted = comodule if report.coaction_ok and report.compatible else None
    return CoactionOnFunctorReport(report.coaction_ok, report.compatible, lifted)
