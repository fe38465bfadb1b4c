"""
Hom-set oracle for the free/forgetful pairing of a q-unital monad

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
from .algebra import AlgebraModule, QUnitalAlgebra, free_module, law_report, module_report
from .constants import ORACLE_DIMS
from .enumeration import enumerate_compatible_modules

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("ModuleOracle")


#################
# ORACLE REPORT #
#################


@dataclass(frozen=True)
class OracleReport:
    """Brute-force regularity of a pairing against the structural flags"""

    domain_ok: bool
    """The free objects land in the category of compatible (co)modules"""

    alpha_regular: bool
    """α = α·β·α on every enumerated morphism"""

    beta_regular: bool
    """β = β·α·β on every enumerated map"""

    flags_regular: bool
    """Prediction from the law report"""

    pairs_checked: int
    """Number of (test object, (co)module) pairs scanned"""

    counterexample: Optional[str] = None

    alpha_flag: Optional[bool] = None
    """Separate prediction for α, when the flags decide α and β apart"""

    beta_flag: Optional[bool] = None

    @property
    def pointwise_regular(self) -> bool:
        return self.domain_ok and self.alpha_regular and self.beta_regular

    @property
    def agrees(self) -> bool:
        if self.alpha_flag is not None and self.alpha_flag != self.alpha_regular:
            return False
        if self.beta_flag is not None and self.beta_flag != self.beta_regular:
            return False
        return self.pointwise_regular == self.flags_regular


# ------------------------------------------------------------------------------


##########
# ORACLE #
##########


def _test_family(F: QUnitalAlgebra, dims: int, cap: Optional[int]) -> List[AlgebraModule]:
    family = enumerate_compatible_modules(F, dims, cap)
    free = free_module(F, 1)
    report = module_report(free)
    if report.action_ok and report.compatible and not any(
        module.dim == free.dim and module.rho == free.rho for module in family
    ):
        family.append(free)
    return family


def module_pairing_oracle(
    F: QUnitalAlgebra, dims: int = ORACLE_DIMS, cap: int = None
) -> OracleReport:
    """
    Scan α(f) = f·η_A and β(g) = ϱ·F(g) over every test object A = R^d,
    d ≤ dims, every compatible module B and every morphism between them

    :param F: algebra housing the monad
    :param dims: largest test object and module dimension
    :param cap: enumeration cap for each hom-set
    :return: pointwise regularity compared with unit_regular ∧ mult_compatible
    """
    ring, a = F.ring, F.dim
    report = law_report(F)
    flags_regular = report.unit_regular and report.mult_compatible

    domain_ok = module_report(free_module(F, 1)).compatible
    alpha_ok = beta_ok = True
    counterexample = None
    pairs = 0
    family = _test_family(F, dims, cap)

    for d in range(dims + 1):
        unit = tensor(F.u, identity(ring, d))
        mult = tensor(F.m, identity(ring, d))
        for B in family:
            pairs += 1
            check_cap(count_maps(a * d, B.dim, ring) + count_maps(d, B.dim, ring), cap)

            def alpha(f: LinMap) -> LinMap:
                return compose(f, unit)

            def beta(g: LinMap) -> LinMap:
                return compose(B.rho, tensor(identity(ring, a), g))

            for f in enumerate_maps(a * d, B.dim, ring, cap):
                # F-morphisms φ(A) → B only
                if compose(f, mult) != compose(B.rho, tensor(identity(ring, a), f)):
                    continue
                if alpha_ok and alpha(f) != alpha(beta(alpha(f))):
                    alpha_ok = False
                    counterexample = f"α fails on R^{d} → module of dim {B.dim}"
            for g in enumerate_maps(d, B.dim, ring, cap):
                if beta_ok and beta(g) != beta(alpha(beta(g))):
                    beta_ok = False
                    counterexample = counterexample or (
                        f"β fails on R^{d} → module of dim {B.dim}"
                    )

    oracle = OracleReport(domain_ok, alpha_ok, beta_ok, flags_regular, pairs, counterexample)
    if not oracle.agrees:
        logger.warning(
            f"pointwise regularity {oracle.pointwise_regular} "
            f"disagrees with the flags {flags_regular}"
        )
    return oracle


# ------------------------------------------------------------------------------


#####################
# ACTION ON FUNCTOR #
#####################


@dataclass(frozen=True)
class ActionOnFunctorReport:
    module: bool
    compatible: bool
    lifted: Optional[AlgebraModule]
    """The factorization T̄ through the compatible modules, when it exists"""


def module_action_on_functor_check(
    G: QUnitalAlgebra, t: int, rho: LinMap
) -> ActionOnFunctorReport:
    """
    A G-action on the functor T⊗– is an action of G on the carrier of T;
    when it is a compatible one, T factors through the compatible modules

    :param G: algebra housing the monad
    :param t: carrier dimension of T
    :param rho: action GT → T
    :raise InvalidStructure: on a dimension mismatch
    """
    module = AlgebraModule(G, t, rho)
    report = module_report(module)
    lifted = module if report.action_ok and report.compatible else None
    return ActionOnFunctorReport(report.action_ok, report.compatible, lifted)
