"""
Monad and comonad induced by a pairing, and the comparison functors

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
from itertools import product
from typing import Union

# Exact linear algebra
from ..linalg import check_cap, compose, count_maps, enumerate_maps, identity, tensor

# Monadics
from ..monadics import AlgebraModule, QUnitalAlgebra, free_module, module_report

# Comonadics
from ..comonadics import (
    CoalgebraComodule,
    QCounitalCoalgebra,
    comodule_report,
    free_comodule,
)

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


logger = WeakLogger.get_logger("ComparisonFunctors")


#####################
# INDUCED STRUCTURE #
#####################


def induced_monad(P: DualPairing) -> QUnitalAlgebra:
    """(RL, RεL, η) on the carrier B⊗A"""
    I_a, I_b = identity(P.ring, P.a), identity(P.ring, P.b)
    return QUnitalAlgebra(P.ring, P.b * P.a, tensor(I_b, P.eps, I_a), P.eta)


def induced_comonad(P: DualPairing) -> QCounitalCoalgebra:
    """(LR, LηR, ε) on the carrier A⊗B"""
    I_a, I_b = identity(P.ring, P.a), identity(P.ring, P.b)
    return QCounitalCoalgebra(P.ring, P.a * P.b, tensor(I_a, P.eta, I_b), P.eps)


def hat_r(P: DualPairing, dim: int) -> AlgebraModule:
    """R̂(R^dim) = (R(R^dim), Rε)"""
    rho = tensor(identity(P.ring, P.b), P.eps, identity(P.ring, dim))
    return AlgebraModule(induced_monad(P), P.b * dim, rho)


def tilde_l(P: DualPairing, dim: int) -> CoalgebraComodule:
    """L̃(R^dim) = (L(R^dim), Lη)"""
    upsilon = tensor(identity(P.ring, P.a), P.eta, identity(P.ring, dim))
    return CoalgebraComodule(induced_comonad(P), P.a * dim, upsilon)


# ------------------------------------------------------------------------------


##############
# COMPARISON #
##############


def _lands_compatible(M: Union[AlgebraModule, CoalgebraComodule]) -> bool:
    """(Co)action law and compatibility of a test object"""
    if isinstance(M, AlgebraModule):
        report = module_report(M)
        return report.action_ok and report.compatible
    report = comodule_report(M)
    return report.coaction_ok and report.compatible


@dataclass(frozen=True)
class ComparisonReport:
    hatR_lands_compatible: bool
    hatL_lands_compatible: bool
    triangle_left: bool
    """R̂·L = φ_RL into the compatible RL-modules, on objects and morphisms"""

    triangle_right: bool
    """U_RL·R̂ = R"""

    co_triangle_left: bool
    """L̃·R = φ^LR into the compatible LR-comodules"""

    co_triangle_right: bool
    """U^LR·L̃ = L"""

    alpha_symmetry_diagram: bool
    beta_symmetry_diagram: bool
    alpha_symmetric: bool
    """ϑ = ϑ̲, reported next to the diagram it is compared with"""

    beta_symmetric: bool


def comparison_check(
    P: DualPairing, dims: int = ORACLE_DIMS, cap: int = None
) -> ComparisonReport:
    """
    Check the comparison functors R̂: B' ↦ (R(B'), Rε) and
    L̃: A' ↦ (L(A'), Lη) on the test objects R^0 … R^dims and on every
    morphism between them

    :param P: pairing over a Z_n ring
    :param dims: largest test object dimension
    :param cap: enumeration cap for each hom-set
    """
    ring, a, b = P.ring, P.a, P.b
    I_a, I_b = identity(ring, a), identity(ring, b)
    report = pairing_report(P)
    monad, comonad = induced_monad(P), induced_comonad(P)

    # R̂(R^d) and L̃(R^d) must be compatible, as must the free (co)modules
    # φ_RL(R^d) and φ^LR(R^d) the triangles compare them with
    hat_r_ok = hat_l_ok = left = co_left = True
    for d in range(dims + 1):
        hat_r_ok &= _lands_compatible(hat_r(P, d))
        hat_l_ok &= _lands_compatible(tilde_l(P, d))

        free, image = free_module(monad, d), hat_r(P, a * d)
        left &= image.dim == free.dim and image.rho == free.rho
        left &= _lands_compatible(free)
        co_free, co_image = free_comodule(comonad, d), tilde_l(P, b * d)
        co_left &= co_image.dim == co_free.dim and co_image.upsilon == co_free.upsilon
        co_left &= _lands_compatible(co_free)

    # on morphisms k: R^d → R^e, the image of k must be a (co)module morphism
    for d, e in product(range(dims + 1), repeat=2):
        check_cap(count_maps(d, e, ring), cap)
        for k in enumerate_maps(d, e, ring, cap):
            # R̂(k) = R(k), L̃(k) = L(k)
            hat_r_k, tilde_l_k = tensor(I_b, k), tensor(I_a, k)
            hat_r_ok &= compose(
                hat_r(P, e).rho, tensor(identity(ring, monad.dim), hat_r_k)
            ) == compose(hat_r_k, hat_r(P, d).rho)
            hat_l_ok &= compose(
                tensor(identity(ring, comonad.dim), tilde_l_k), tilde_l(P, d).upsilon
            ) == compose(tilde_l(P, e).upsilon, tilde_l_k)

            # φ_RL(k) = RL(k) and φ^LR(k) = LR(k) between free (co)modules
            free_k = tensor(identity(ring, b * a), k)
            co_free_k = tensor(identity(ring, a * b), k)
            left &= compose(
                free_module(monad, e).rho, tensor(identity(ring, monad.dim), free_k)
            ) == compose(free_k, free_module(monad, d).rho)
            co_left &= compose(
                tensor(identity(ring, comonad.dim), co_free_k),
                free_comodule(comonad, d).upsilon,
            ) == compose(free_comodule(comonad, e).upsilon, co_free_k)

    # U_RL·R̂ = R and U^LR·L̃ = L hold on carriers and maps by construction,
    # as functors out of the compatible (co)modules they need R̂ and L̃ to land there
    right, co_right = hat_r_ok, hat_l_ok

    alpha_diagram = beta_diagram = True
    for d, e in product(range(dims + 1), repeat=2):
        check_cap(count_maps(a * d, e, ring) + count_maps(d, b * e, ring), cap)
        target = hat_r(P, e)
        for f in enumerate_maps(a * d, e, ring, cap):
            # R̂·β·α against β_RL·α_RL·R̂, with α_RL(h) = h·η and β_RL(g) = ϱ·RL(g)
            top = tensor(I_b, beta_map(P, alpha_map(P, f, d, e), d, e))
            lifted = tensor(I_b, f)
            bottom = compose(
                target.rho,
                tensor(
                    identity(ring, monad.dim),
                    compose(lifted, tensor(P.eta, identity(ring, d))),
                ),
            )
            alpha_diagram &= top == bottom
        source = tilde_l(P, d)
        for g in enumerate_maps(d, b * e, ring, cap):
            # L̃·α·β against α^LR·β^LR·L̃, with β^LR(h) = ε·h and α^LR(f) = LR(f)·υ
            top = tensor(I_a, alpha_map(P, beta_map(P, g, d, e), d, e))
            counit = compose(tensor(P.eps, identity(ring, e)), tensor(I_a, g))
            bottom = compose(tensor(identity(ring, comonad.dim), counit), source.upsilon)
            beta_diagram &= top == bottom

    if alpha_diagram != report.alpha_symmetric:
        logger.info(
            f"α symmetry diagram {'commutes' if alpha_diagram else 'fails'} "
            f"while ϑ = ϑ̲ is {report.alpha_symmetric}"
        )
    if beta_diagram != report.beta_symmetric:
        logger.info(
            f"β symmetry diagram {'commutes' if beta_diagram else 'fails'} "
            f"while γ = γ̲ is {report.beta_symmetric}"
        )
    return ComparisonReport(
        hatR_lands_compatible=bool(hat_r_ok),
        hatL_lands_compatible=bool(hat_l_ok),
        triangle_left=bool(left),
        triangle_right=bool(right),
        co_triangle_left=bool(co_left),
        co_triangle_right=bool(co_right),
        alpha_symmetry_diagram=bool(alpha_diagram),
        beta_symmetry_diagram=bool(beta_diagram),
        alpha_symmetric=report.alpha_symmetric,
        beta_symmetric=report.beta_symmetric,
    )
