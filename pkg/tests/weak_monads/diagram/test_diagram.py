"""
Test the formal 2-cell calculus

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

# Test
import pytest

# Exact linear algebra
from weak_monads.linalg import ExactRing, LinMap, identity, tensor

# Diagram
from weak_monads.diagram import (
    Id,
    IllTypedComposite,
    InvalidSignature,
    NotParallelPair,
    Signature,
    UnknownGenerator,
    UnknownSymbol,
    Whisker,
    carrier,
    vert,
)

# Constants
from tests.constants import I2_PRODUCT, I2_THETA, UNIT_E1

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


Z2 = ExactRing.zn(2)


@pytest.fixture
def pointwise() -> Signature:
    """Letter F of dimension 2 with the pointwise product and the quasi-unit e1"""
    return Signature.build(
        Z2,
        {"F": 2},
        [
            ("mu", "F F", "F", LinMap.from_rows(Z2, I2_PRODUCT)),
            ("eta", "", "F", LinMap.from_rows(Z2, UNIT_E1)),
        ],
    )


class TestSignature:
    """
    Test the construction of signatures
    """

    def test_words(self, pointwise):
        """
        Test that words resolve to letters and carriers multiply
        """
        assert carrier(pointwise.word("F F F")) == 8, "carrier of FFF is 2³"
        assert carrier(pointwise.word("")) == 1, "the identity functor has carrier R"
        with pytest.raises(UnknownSymbol):
            pointwise.word("F G")

    def test_body_shape_checked(self):
        """
        Test that a body must match the carriers of its boundary
        """
        with pytest.raises(InvalidSignature):
            Signature.build(Z2, {"F": 2}, [("mu", "F F", "F", identity(Z2, 2))])

    def test_duplicate_generator(self, pointwise):
        """
        Test that a generator name cannot be declared twice
        """
        with pytest.raises(InvalidSignature):
            pointwise.extend(generators=[("mu", "F", "F", identity(Z2, 2))])

    def test_extend(self, pointwise):
        """
        Test that extending keeps the original generators
        """
        extended = pointwise.extend({"G": 3}, [("g", "G", "G", identity(Z2, 3))])
        assert set(extended.generators) == {"mu", "eta", "g"}, "generators lost"
        assert "G" not in pointwise.symbols, "the original signature must not change"


class TestEvaluation:
    """
    Test the evaluation of cells to matrices
    """

    def test_identity(self, pointwise):
        """
        Test that identity cells evaluate to identity matrices
        """
        assert pointwise.evaluate(pointwise.ident("F F")) == identity(Z2, 4), "id[FF] != I4"
        assert pointwise.evaluate(Id(())) == identity(Z2, 1), "id[] != I1"

    def test_whisker(self, pointwise):
        """
        Test that whiskering tensors with identities on the correct legs
        """
        mu = LinMap.from_rows(Z2, I2_PRODUCT)
        left = pointwise.at("F", "mu")
        right = pointwise.at("", "mu", "F")
        assert isinstance(left, Whisker), "a non trivial whisker"
        assert pointwise.evaluate(left) == tensor(identity(Z2, 2), mu), "Fμ is id⊗m"
        assert pointwise.evaluate(right) == tensor(mu, identity(Z2, 2)), "μF is m⊗id"
        assert pointwise.at("", "mu", "") == pointwise.gen("mu"), "empty whiskers vanish"

    def test_theta(self, pointwise):
        """
        Test ϑ = μ·Fη, i.e. a ↦ a·e1
        """
        theta = vert(pointwise.gen("mu"), pointwise.at("F", "eta"))
        assert pointwise.boundary(theta) == (
            pointwise.word("F"),
            pointwise.word("F"),
        ), "ϑ is an endomorphism of F"
        assert pointwise.evaluate(theta) == LinMap.from_rows(Z2, I2_THETA), "ϑ != a·e1"

    def test_horizontal_interchange(self, pointwise):
        """
        Test that μ∗μ equals both ways of composing the whiskers
        """
        mu = pointwise.gen("mu")
        both = pointwise.horizontal(mu, mu)
        other = vert(pointwise.at("F", "mu"), pointwise.at("", "mu", "F F"))
        assert pointwise.check_equation(both, other), "the interchange law fails"

    def test_ill_typed(self, pointwise):
        """
        Test that composing non-matching boundaries is refused
        """
        with pytest.raises(IllTypedComposite):
            pointwise.evaluate(vert(pointwise.gen("mu"), pointwise.gen("mu")))

    def test_unknown_generator(self, pointwise):
        """
        Test that an undeclared generator is refused
        """
        with pytest.raises(UnknownGenerator):
            pointwise.gen("delta")


class TestEquations:
    """
    Test deciding equations of cells
    """

    def test_associativity(self, pointwise):
        """
        Test μ·Fμ = μ·μF for the pointwise product
        """
        mu = pointwise.gen("mu")
        result = pointwise.check_equation(
            vert(mu, pointwise.at("F", "mu")), vert(mu, pointwise.at("", "mu", "F"))
        )
        assert result, "the pointwise product is associative"
        assert result.witness is None, "no witness for an equation that holds"

    def test_compatibility_witness(self, pointwise):
        """
        Test that μ = μ·μF·FηF fails on e2⊗e2
        """
        mu = pointwise.gen("mu")
        result = pointwise.check_equation(
            mu, vert(mu, pointwise.at("", "mu", "F"), pointwise.at("F", "eta", "F"))
        )
        assert not result.holds, "a·b differs from a·e1·b"
        assert result.witness == 3, "first differing basis vector is e2⊗e2"
        assert "mu" in result.lhs and "eta" in result.rhs, "both sides are rendered"

    def test_not_parallel(self, pointwise):
        """
        Test that sides with different boundaries are refused
        """
        with pytest.raises(NotParallelPair):
            pointwise.check_equation(pointwise.gen("mu"), pointwise.ident("F"))
