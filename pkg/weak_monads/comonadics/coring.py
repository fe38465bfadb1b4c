"""
Weak corings and pre-corings over a unital base algebra

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
from typing import Dict, Iterator, List, Optional

# Exact linear algebra
from ..linalg import (
    LinMap,
    basis_vector,
    check_cap,
    compose,
    count_maps,
    enumerate_maps,
    hstack,
    identity,
    in_column_space,
    split_idempotent,
    tensor,
    zero_map,
)

# Monadics
from ..monadics import QUnitalAlgebra

# Comonadics
from .constants import InvalidStructure

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("WeakCoring")


##########
# CORING #
##########


@dataclass(frozen=True)
class WeakCoring:
    """
    Bimodule 𝒞 = R^dim over a unital algebra A, unital on the right and
    possibly non-unital on the left, with a coassociative A-bilinear
    Δ: 𝒞 → 𝒞⊗_A𝒞 and an A-bilinear ε: 𝒞 → A.

    Δ is stored as a lift to 𝒞⊗𝒞; equations in 𝒞⊗_A𝒞 are decided modulo
    the balancing subspace spanned by x·a⊗y − x⊗a·y. The checks need a
    field as ground ring.
    """

    base: QUnitalAlgebra
    dim: int
    left: LinMap
    """Left action A⊗𝒞 → 𝒞"""

    right: LinMap
    """Right action 𝒞⊗A → 𝒞"""

    delta: LinMap
    eps: LinMap
    """ε: 𝒞 → A"""

    def __post_init__(self):
        a, c, ring = self.base.dim, self.dim, self.base.ring
        shapes = {
            "left action": (self.left.shape, (c, a * c)),
            "right action": (self.right.shape, (c, c * a)),
            "coproduct": (self.delta.shape, (c * c, c)),
            "counit": (self.eps.shape, (a, c)),
        }
        for name, (actual, expected) in shapes.items():
            if actual != expected:
                raise InvalidStructure(f"{name} must be {expected[0]}x{expected[1]}")

        I_a, m, u = identity(ring, a), self.base.m, self.base.u
        if not (compose(m, tensor(u, I_a)) == I_a == compose(m, tensor(I_a, u))):
            raise InvalidStructure("base algebra is not unital")
        for label, holds in self.module_laws().items():
            if not holds:
                raise InvalidStructure(label)

    # --------------------------------------------------------------------------
    # Structure helpers

    def module_laws(self) -> Dict[str, bool]:
        """Failure label -> whether the bimodule and coring law holds"""
        a, c, ring = self.base.dim, self.dim, self.base.ring
        I_a, I_c, m, u = identity(ring, a), identity(ring, c), self.base.m, self.base.u
        left, right, delta, eps = self.left, self.right, self.delta, self.eps
        N2, N3 = self.balancing(2), self.balancing(3)
        return {
            "left action not associative": compose(left, tensor(I_a, left))
            == compose(left, tensor(m, I_c)),
            "right action not associative": compose(right, tensor(right, I_a))
            == compose(right, tensor(I_c, m)),
            "right action not unital": compose(right, tensor(I_c, u)) == I_c,
            "actions do not commute": compose(right, tensor(left, I_a))
            == compose(left, tensor(I_a, right)),
            "Δ not coassociative": in_column_space(
                N3,
                compose(tensor(delta, I_c), delta) - compose(tensor(I_c, delta), delta),
            ),
            "Δ not left A-linear": in_column_space(
                N2, compose(delta, left) - compose(tensor(left, I_c), tensor(I_a, delta))
            ),
            "Δ not right A-linear": in_column_space(
                N2, compose(delta, right) - compose(tensor(I_c, right), tensor(delta, I_a))
            ),
            "ε not left A-linear": compose(eps, left) == compose(m, tensor(I_a, eps)),
            "ε not right A-linear": compose(eps, right) == compose(m, tensor(eps, I_a)),
        }

    def acting(self, index: int) -> LinMap:
        """Left multiplication by the basis element a_index"""
        a, ring = self.base.dim, self.base.ring
        return compose(self.left, tensor(basis_vector(ring, a, index), identity(ring, self.dim)))

    def acted(self, index: int) -> LinMap:
        """Right multiplication by the basis element a_index"""
        a, ring = self.base.dim, self.base.ring
        return compose(self.right, tensor(identity(ring, self.dim), basis_vector(ring, a, index)))

    def balancing(self, legs: int) -> LinMap:
        """Columns spanning the kernel of 𝒞^{⊗legs} → 𝒞^{⊗_A legs}"""
        ring, c = self.base.ring, self.dim
        blocks = []
        for position in range(legs - 1):
            before = identity(ring, c ** position)
            after = identity(ring, c ** (legs - 2 - position))
            for index in range(self.base.dim):
                swap = tensor(self.acted(index), identity(ring, c)) - tensor(
                    identity(ring, c), self.acting(index)
                )
                blocks.append(tensor(before, swap, after))
        if not blocks:
            return zero_map(ring, c ** legs, 0)
        return hstack(*blocks)

    @property
    def unit_action(self) -> LinMap:
        """c ↦ 1_A·c"""
        return compose(self.left, tensor(self.base.u, identity(self.base.ring, self.dim)))

    @property
    def counit_left(self) -> LinMap:
        """c ↦ Σ ε(c1)c2"""
        return compose(self.left, tensor(self.eps, identity(self.base.ring, self.dim)), self.delta)

    @property
    def counit_right(self) -> LinMap:
        """c ↦ Σ c1ε(c2)"""
        return compose(self.right, tensor(identity(self.base.ring, self.dim), self.eps), self.delta)


# ------------------------------------------------------------------------------


##########
# REPORT #
##########


@dataclass(frozen=True)
class CoringReport:
    weak_coring: bool
    pre_coring: bool
    unitality_of_delta: bool
    restricted_coring_ok: Optional[bool]
    """None when the restriction was not requested"""

    restricted: Optional[WeakCoring] = None

    @property
    def coring(self) -> bool:
        return self.weak_coring and self.pre_coring


def is_coring(C: WeakCoring) -> bool:
    """Counital coring axioms, left action unital included"""
    I_c = identity(C.base.ring, C.dim)
    return C.unit_action == I_c and C.counit_left == I_c and C.counit_right == I_c


def restrict(C: WeakCoring) -> WeakCoring:
    """
    Restriction and corestriction to A𝒞, the image of c ↦ 1_A·c

    :raise SplittingUnsupported: over a ground ring that is not a field
    """
    ring, a = C.base.ring, C.base.dim
    p, i = split_idempotent(C.unit_action)
    I_a = identity(ring, a)
    return WeakCoring(
        C.base,
        p.rows,
        compose(p, C.left, tensor(I_a, i)),
        compose(p, C.right, tensor(i, I_a)),
        compose(tensor(p, p), C.delta, i),
        compose(C.eps, i),
    )


def coring_report(C: WeakCoring, restriction: bool = True) -> CoringReport:
    """
    Decide the weak coring and pre-coring counit laws, 1_A·Δ(c) = Δ(c),
    and whether the restriction to A𝒞 is a coring

    :param C: weak coring candidate
    :param restriction: also split 1_A·(–) and check the restricted coring
    :raise SplittingUnsupported: over a ground ring that is not a field
    """
    I_c = identity(C.base.ring, C.dim)
    e = C.unit_action
    weak = C.counit_left == e and C.counit_right == e
    pre = C.counit_left == I_c and C.counit_right == e
    unital_delta = in_column_space(
        C.balancing(2), compose(tensor(e, I_c), C.delta) - C.delta
    )

    restricted_ok, restricted = None, None
    if restriction:
        try:
            restricted = restrict(C)
            restricted_ok = is_coring(restricted)
        except InvalidStructure as error:
            logger.warning(f"restriction is not a bimodule coring: {error}")
            restricted_ok = False
    return CoringReport(weak, pre, unital_delta, restricted_ok, restricted)


# ------------------------------------------------------------------------------


##########
# SEARCH #
##########


@dataclass(frozen=True)
class CoringSplit:
    weak_not_pre: Optional[WeakCoring]
    pre_not_weak: Optional[WeakCoring]
    candidates: int
    """Counit-law candidates that reached the full validation"""


def _actions(base: QUnitalAlgebra, dim: int, cap: Optional[int]) -> Iterator[tuple]:
    ring, a = base.ring, base.dim
    I_a, I_c = identity(ring, a), identity(ring, dim)
    rights: List[LinMap] = [
        right
        for right in enumerate_maps(dim * a, dim, ring, cap)
        if compose(right, tensor(I_c, base.u)) == I_c
        and compose(right, tensor(right, I_a)) == compose(right, tensor(I_c, base.m))
    ]
    for left in enumerate_maps(a * dim, dim, ring, cap):
        if compose(left, tensor(I_a, left)) != compose(left, tensor(base.m, I_c)):
            continue
        for right in rights:
            if compose(right, tensor(left, I_a)) == compose(left, tensor(I_a, right)):
                yield left, right


def search_coring_flag_split(
    base: QUnitalAlgebra, dim: int, cap: int = None
) -> CoringSplit:
    """
    Look for bimodule corings over the base whose weak coring and pre-coring
    flags differ, scanning actions, counits and coproducts in map order.
    The counit laws are tested before the balanced-tensor validation.

    :param base: unital algebra A
    :param dim: dimension of 𝒞
    :param cap: enumeration cap on the raw candidate count
    :return: the first instance of each kind, None when there is none
    """
    ring, a = base.ring, base.dim
    check_cap(
        count_maps(a * dim, dim, ring)
        * count_maps(dim * a, dim, ring)
        * count_maps(dim, a, ring)
        * count_maps(dim, dim * dim, ring),
        cap,
    )
    I_a, I_c = identity(ring, a), identity(ring, dim)
    found = {"weak": None, "pre": None}
    candidates = 0

    for left, right in _actions(base, dim, cap):
        unit_action = compose(left, tensor(base.u, I_c))
        for eps in enumerate_maps(dim, a, ring, cap):
            if compose(eps, left) != compose(base.m, tensor(I_a, eps)) or compose(
                eps, right
            ) != compose(base.m, tensor(eps, I_a)):
                continue
            on_left = compose(left, tensor(eps, I_c))
            on_right = compose(right, tensor(I_c, eps))
            for delta in enumerate_maps(dim, dim * dim, ring, cap):
                counit_left = compose(on_left, delta)
                if compose(on_right, delta) != unit_action:
                    continue
                weak, pre = counit_left == unit_action, counit_left == I_c
                kind = "weak" if weak and not pre else "pre" if pre and not weak else None
                if kind is None or found[kind] is not None:
                    continue
                candidates += 1
                try:
                    found[kind] = WeakCoring(base, dim, left, right, delta, eps)
                except InvalidStructure:
                    continue
                logger.info(f"found a {kind} instance after {candidates} candidates")
                if all(found.values()):
                    return CoringSplit(found["weak"], found["pre"], candidates)

    if found["pre"] is None:
        logger.info(f"no pre-coring that is not a weak coring in dimension {dim}")
    return CoringSplit(found["weak"], found["pre"], candidates)
