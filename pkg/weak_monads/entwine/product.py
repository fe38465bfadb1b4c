"""
Entwined products of weak monads and coproducts of weak comonads

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
from typing import Dict, Mapping, Optional, Tuple

# Exact linear algebra
from ..linalg import LinMap

# Diagram
from ..diagram import LawResult, Signature, vert

# Monadics and comonadics
from ..comonadics import (
    ComonadClass,
    ComonadMorphism,
    InvalidStructure as InvalidCoalgebra,
    QCounitalCoalgebra,
    comonad_morphism_report,
    gamma_cell,
    law_report_co,
)
from ..comonadics import MorphismReport as ComorphismReport
from ..monadics import (
    InvalidStructure as InvalidAlgebra,
    MonadClass,
    MonadMorphism,
    MorphismReport,
    QUnitalAlgebra,
    law_report,
    monad_morphism_report,
    theta_cell,
)

# Entwining
from .constants import InvalidEntwining, PreconditionViolated

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


####################
# ENTWINED PRODUCT #
####################


@dataclass(frozen=True)
class EntwinedProduct:
    """Product and quasi-unit on TF, with the flags of both sides of the equivalence"""

    m: LinMap
    """μ̄ = μ̌F·TTμ·TλF"""

    u: LinMap
    """η̄ = λ·Fη̌·η"""

    algebra: Optional[QUnitalAlgebra]
    """None when μ̄ is not associative"""

    weak: bool
    """(TF, μ̄, η̄) is a weak monad"""

    lift_equ_r_end: bool
    lift_q_mon: bool
    results: Mapping[str, LawResult]

    @property
    def diagrams(self) -> bool:
        """λ makes every diagram of the distributive side commute"""
        return self.lift_equ_r_end and self.lift_q_mon

    def flags(self) -> Dict[str, bool]:
        return {name: result.holds for name, result in self.results.items()}


def _product_signature(F: QUnitalAlgebra, T: QUnitalAlgebra, lam: LinMap) -> Signature:
    if lam.shape != (T.dim * F.dim, F.dim * T.dim):
        raise InvalidEntwining(f"λ must be {T.dim * F.dim}x{F.dim * T.dim}")
    sig = T.register(F.signature(), "T", "muT", "etaT")
    return sig.extend({}, [("lam", "F T", "T F", lam)])


def _require_weak(F: QUnitalAlgebra) -> None:
    if law_report(F).classification is not MonadClass.WEAK:
        raise PreconditionViolated("not a weak monad")


def entwined_product(F: QUnitalAlgebra, T: QUnitalAlgebra, lam: LinMap) -> EntwinedProduct:
    """
    Product and quasi-unit on TF built from λ: FT → TF

    :param F: weak monad
    :param T: weak monad
    :param lam: (t·f)×(f·t) map
    :return: the structure maps, the algebra when associative, and the flags
    :raise PreconditionViolated: when F or T is not a weak monad
    """
    _require_weak(F)
    _require_weak(T)
    sig = _product_signature(F, T, lam)
    lam_cell = sig.gen("lam")
    theta = theta_cell(sig)
    theta_t = theta_cell(sig, "T", "muT", "etaT")

    m = sig.evaluate(vert(sig.at("", "muT", "F"), sig.at("T T", "mu"), sig.at("T", "lam", "F")))
    u = sig.evaluate(vert(lam_cell, sig.at("F", "etaT"), sig.gen("eta")))

    results = {
        "end-rect": sig.check_equation(
            vert(sig.at("T", "mu"), sig.at("", "lam", "F"), sig.at("F", "lam")),
            vert(lam_cell, sig.at("", "mu", "T")),
        ),
        "end-left-triangle": sig.check_equation(vert(lam_cell, sig.at("", theta, "T")), lam_cell),
        "end-right-triangle": sig.check_equation(vert(sig.at("T", theta), lam_cell), lam_cell),
        "q-mon-rect": sig.check_equation(
            vert(sig.at("", "muT", "F"), sig.at("T", "lam"), sig.at("", "lam", "T")),
            vert(lam_cell, sig.at("F", "muT")),
        ),
        "q-mon-left-triangle": sig.check_equation(
            vert(lam_cell, sig.at("F", theta_t)), lam_cell
        ),
        "q-mon-right-triangle": sig.check_equation(
            vert(sig.at("", theta_t, "F"), lam_cell), lam_cell
        ),
    }

    try:
        algebra = QUnitalAlgebra(F.ring, T.dim * F.dim, m, u)
    except InvalidAlgebra:
        algebra = None
    weak = algebra is not None and law_report(algebra).classification is MonadClass.WEAK

    return EntwinedProduct(
        m=m,
        u=u,
        algebra=algebra,
        weak=weak,
        lift_equ_r_end=all(
            results[name] for name in ("end-rect", "end-left-triangle", "end-right-triangle")
        ),
        lift_q_mon=all(
            results[name]
            for name in ("q-mon-rect", "q-mon-left-triangle", "q-mon-right-triangle")
        ),
        results=MappingProxyType(results),
    )


def product_morphisms_report(
    F: QUnitalAlgebra, T: QUnitalAlgebra, lam: LinMap
) -> Tuple[MorphismReport, MorphismReport]:
    """
    λ·Fη̌: F → TF and λ·ηT: T → TF as morphisms of q-unital monads into
    the entwined product

    :raise PreconditionViolated: when the entwined product is not a weak monad
    """
    product = entwined_product(F, T, lam)
    if not product.weak:
        raise PreconditionViolated("entwined product is not a weak monad")
    sig = _product_signature(F, T, lam)
    from_f = sig.evaluate(vert(sig.gen("lam"), sig.at("F", "etaT")))
    from_t = sig.evaluate(vert(sig.gen("lam"), sig.at("", "eta", "T")))
    return (
        monad_morphism_report(MonadMorphism(F, product.algebra, from_f)),
        monad_morphism_report(MonadMorphism(T, product.algebra, from_t)),
    )


# ------------------------------------------------------------------------------


######################
# ENTWINED COPRODUCT #
######################


@dataclass(frozen=True)
class EntwinedCoproduct:
    """Coproduct and quasi-counit on TG, with the flags of both sides"""

    delta_entwined: LinMap
    """TψG·TTδ·δ̌G"""

    eps: LinMap
    """ε·Gε̌·ψ"""

    coalgebra: Optional[QCounitalCoalgebra]
    weak: bool
    lift_equ_e_co: bool
    lift_comon: bool
    results: Mapping[str, LawResult]

    @property
    def diagrams(self) -> bool:
        return self.lift_equ_e_co and self.lift_comon

    def flags(self) -> Dict[str, bool]:
        return {name: result.holds for name, result in self.results.items()}


def _coproduct_signature(G: QCounitalCoalgebra, T: QCounitalCoalgebra, psi: LinMap) -> Signature:
    if psi.shape != (G.dim * T.dim, T.dim * G.dim):
        raise InvalidEntwining(f"ψ must be {G.dim * T.dim}x{T.dim * G.dim}")
    sig = T.register(G.signature(), "T", "deltaT", "epsT")
    return sig.extend({}, [("psi", "T G", "G T", psi)])


def _require_weak_co(G: QCounitalCoalgebra) -> None:
    if law_report_co(G).classification is not ComonadClass.WEAK:
        raise PreconditionViolated("not a weak comonad")


def entwined_coproduct(
    G: QCounitalCoalgebra, T: QCounitalCoalgebra, psi: LinMap
) -> EntwinedCoproduct:
    """
    Coproduct and quasi-counit on TG built from ψ: TG → GT

    :param G: weak comonad
    :param T: weak comonad
    :param psi: (g·t)×(t·g) map
    :raise PreconditionViolated: when G or T is not a weak comonad
    """
    _require_weak_co(G)
    _require_weak_co(T)
    sig = _coproduct_signature(G, T, psi)
    psi_cell = sig.gen("psi")
    gamma = gamma_cell(sig)
    gamma_t = gamma_cell(sig, "T", "deltaT", "epsT")

    delta = sig.evaluate(
        vert(sig.at("T", "psi", "G"), sig.at("T T", "delta"), sig.at("", "deltaT", "G"))
    )
    eps = sig.evaluate(vert(sig.gen("eps"), sig.at("G", "epsT"), psi_cell))

    results = {
        "end-co-rect": sig.check_equation(
            vert(sig.at("", "delta", "T"), psi_cell),
            vert(sig.at("G", "psi"), sig.at("", "psi", "G"), sig.at("T", "delta")),
        ),
        "end-co-left-triangle": sig.check_equation(vert(psi_cell, sig.at("T", gamma)), psi_cell),
        "end-co-right-triangle": sig.check_equation(
            vert(sig.at("", gamma, "T"), psi_cell), psi_cell
        ),
        "comon-rect": sig.check_equation(
            vert(sig.at("G", "deltaT"), psi_cell),
            vert(sig.at("", "psi", "T"), sig.at("T", "psi"), sig.at("", "deltaT", "G")),
        ),
        "comon-left-triangle": sig.check_equation(
            vert(psi_cell, sig.at("", gamma_t, "G")), psi_cell
        ),
        "comon-right-triangle": sig.check_equation(
            vert(sig.at("G", gamma_t), psi_cell), psi_cell
        ),
    }

    try:
        coalgebra = QCounitalCoalgebra(G.ring, T.dim * G.dim, delta, eps)
    except InvalidCoalgebra:
        coalgebra = None
    weak = coalgebra is not None and law_report_co(coalgebra).classification is ComonadClass.WEAK

    return EntwinedCoproduct(
        delta_entwined=delta,
        eps=eps,
        coalgebra=coalgebra,
        weak=weak,
        lift_equ_e_co=all(
            results[name]
            for name in ("end-co-rect", "end-co-left-triangle", "end-co-right-triangle")
        ),
        lift_comon=all(
            results[name]
            for name in ("comon-rect", "comon-left-triangle", "comon-right-triangle")
        ),
        results=MappingProxyType(results),
    )


def coproduct_morphisms_report(
    G: QCounitalCoalgebra, T: QCounitalCoalgebra, psi: LinMap
) -> Tuple[ComorphismReport, ComorphismReport]:
    """
    Gε̌·ψ: TG → G and εT·ψ: TG → T as morphisms of q-counital comonads
    out of the entwined coproduct

    :raise PreconditionViolated: when the entwined coproduct is not a weak comonad
    """
    coproduct = entwined_coproduct(G, T, psi)
    if not coproduct.weak:
        raise PreconditionViolated("entwined coproduct is not a weak comonad")
    sig = _coproduct_signature(G, T, psi)
    to_g = sig.evaluate(vert(sig.at("G", "epsT"), sig.gen("psi")))
    to_t = sig.evaluate(vert(sig.at("", "eps", "T"), sig.gen("psi")))
    return (
        comonad_morphism_report(ComonadMorphism(coproduct.coalgebra, G, to_g)),
        comonad_morphism_report(ComonadMorphism(coproduct.coalgebra, T, to_t)),
    )
