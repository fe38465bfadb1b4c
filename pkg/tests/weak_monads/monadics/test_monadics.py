"""
Test q-unital monads, their repairs and their modules

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
from weak_monads.linalg import EnumerationCapExceeded, ExactRing, LinMap, identity, zero_map

# Monadics
from weak_monads.monadics import (
    LAWS,
    InvalidStructure,
    MonadClass,
    MonadMorphism,
    PreconditionViolated,
    QUnitalAlgebra,
    algebra_dictionary,
    enumerate_algebras,
    enumerate_compatible_modules,
    eta_tilde,
    free_module,
    law_report,
    module_action_on_functor_check,
    module_pairing_oracle,
    module_report,
    monad_morphism_report,
    mu_hat,
    mu_tilde,
    regularity_consequences,
    weak_monad_properties,
)

# Constants
from tests.constants import (
    I2_PRODUCT,
    I2_THETA,
    I2_TILDE_PRODUCT,
    I3_PRODUCT,
    I3_UNIT,
    UNIT_E1,
)

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


Z2 = ExactRing.zn(2)


def algebra(product, unit) -> QUnitalAlgebra:
    """Algebra over Z2 from row lists"""
    dim = len(unit)
    return QUnitalAlgebra(
        Z2, dim, LinMap.from_rows(Z2, product), LinMap.from_rows(Z2, unit)
    )


@pytest.fixture
def i2() -> QUnitalAlgebra:
    return algebra(I2_PRODUCT, UNIT_E1)


@pytest.fixture
def i3() -> QUnitalAlgebra:
    return algebra(I3_PRODUCT, I3_UNIT)


class TestStructure:
    """
    Test the validation of structure maps
    """

    def test_not_associative(self):
        """
        Test e1·e1 = e2, e2·e1 = e1: (e1·e1)·e1 = e1 but e1·(e1·e1) = 0
        """
        with pytest.raises(InvalidStructure):
            algebra([[0, 0, 1, 0], [1, 0, 0, 0]], UNIT_E1)

    def test_wrong_shape(self):
        """
        Test that a quasi-unit of the wrong size is refused
        """
        with pytest.raises(InvalidStructure):
            algebra(I2_PRODUCT, [[1], [0], [0]])

    def test_class_order(self):
        """
        Test the order of the classes
        """
        assert MonadClass.WEAK.at_least(MonadClass.R_UNITAL), "weak is r-unital"
        assert MonadClass.R_UNITAL.at_least(MonadClass.Q_UNITAL), "r-unital is q-unital"
        assert not MonadClass.Q_UNITAL.at_least(MonadClass.WEAK), "q-unital is not weak"


class TestLawReport:
    """
    Test the flags and the classification
    """

    def test_pointwise(self, i2):
        """
        Test Z2² with the pointwise product and e = e1
        """
        report = law_report(i2)
        assert report.assoc and report.unit_regular, "e1·e1 = e1"
        assert report.unit_symmetric, "the product is commutative"
        assert not report.mult_compatible, "e2·e2 = e2 but e2·e1·e2 = 0"
        assert report.results["mult-compatible"].witness == 3, "witness e2⊗e2"
        assert report.classification is MonadClass.Q_UNITAL, "not compatible"
        assert report.theta == LinMap.from_rows(Z2, I2_THETA), "ϑ(a) = a·e1"
        assert report.theta == report.theta_bar, "ϑ = ϑ̲ for a central e"

    def test_upper_triangular(self, i3):
        """
        Test the upper triangular matrices with e = E11
        """
        report = law_report(i3)
        assert report.unit_regular, "E11 is idempotent"
        assert not report.unit_symmetric, "E11·E12 = E12 but E12·E11 = 0"
        assert not report.mult_compatible, "E12·E22 = E12 but E12·E11·E22 = 0"
        assert report.flags() == {
            "assoc": True,
            "unit-regular": True,
            "unit-symmetric": False,
            "mult-compatible": False,
        }, "flags of the upper triangular algebra"

    def test_labels(self):
        """
        Test that every flag has a display label
        """
        assert LAWS["mult-compatible"] == "μ:FF→F is compatible", "label changed"
        assert {"assoc", "unit-regular", "unit-symmetric"} <= set(LAWS), "labels missing"


class TestConstructions:
    """
    Test the repair constructions
    """

    def test_mu_tilde(self, i2):
        """
        Test that μ̃ turns the pointwise product into a weak monad
        """
        tilde = mu_tilde(i2)
        assert tilde.m == LinMap.from_rows(Z2, I2_TILDE_PRODUCT), "μ̃(a⊗b) = a·e1·b"
        assert tilde.u == i2.u, "the quasi-unit is kept"
        assert law_report(tilde).classification is MonadClass.WEAK, "μ̃ gives a weak monad"

    def test_mu_tilde_upper_triangular(self, i3):
        """
        Test that μ̃ of a non-central e stops at r-unital
        """
        assert law_report(mu_tilde(i3)).classification is MonadClass.R_UNITAL, "not weak"

    def test_mu_hat(self, i3):
        """
        Test that μ̂ makes an r-unital monad weak
        """
        hat = mu_hat(mu_tilde(i3))
        assert law_report(hat).classification is MonadClass.WEAK, "μ̂ gives a weak monad"

    def test_eta_tilde(self, i2):
        """
        Test η̃ = e·e, which needs a compatible μ
        """
        with pytest.raises(PreconditionViolated) as error:
            eta_tilde(i2)
        assert error.value.label == "μ not compatible", "wrong precondition reported"
        assert eta_tilde(mu_tilde(i2)).u == i2.u, "e1·e1 = e1"

    def test_refusals(self, i2):
        """
        Test the preconditions of μ̃ and μ̂
        """
        with pytest.raises(PreconditionViolated):
            mu_tilde(algebra([[0]], [[1]]))
        with pytest.raises(PreconditionViolated):
            mu_hat(i2)


class TestDictionary:
    """
    Test the element reading of the flags
    """

    @pytest.mark.parametrize("fixture", ["i2", "i3"])
    def test_agrees(self, fixture, request):
        """
        Test that each flag matches its element criterion
        """
        report = algebra_dictionary(request.getfixturevalue(fixture))
        assert all(entry.agrees for entry in report.entries.values()), "criteria disagree"
        assert report.constructions == {
            "mu-tilde-aeb": True,
            "mu-hat-eaebe": True,
        }, "closed formulas of μ̃ and μ̂"
        assert report.consistent, "the dictionary is consistent"

    def test_no_constructions(self):
        """
        Test that the repairs are skipped when e is not idempotent
        """
        report = algebra_dictionary(algebra([[0]], [[1]]))
        assert not report.entries["unit-idempotent"].element, "0·1 = 0 != 1"
        assert report.constructions == {}, "no repair without a regular unit"

    def test_every_algebra_of_dimension_two(self):
        """
        Test the dictionary on every algebra on Z2²
        """
        for F in enumerate_algebras(2, Z2):
            assert algebra_dictionary(F).consistent, f"inconsistent on {F}"


class TestEnumeration:
    """
    Test the exhaustive families
    """

    def test_dimension_one(self):
        """
        Test the four algebras on Z2 and their classes
        """
        algebras = list(enumerate_algebras(1, Z2))
        assert len(algebras) == 4, "two products times two quasi-units"
        assert algebras[0].m.is_zero() and algebras[0].u.is_zero(), "zero comes first"
        classes = [law_report(F).classification for F in algebras]
        assert classes.count(MonadClass.WEAK) == 2, "the zero algebra and the unital one"

    def test_cap(self):
        """
        Test that a family over the cap is refused
        """
        with pytest.raises(EnumerationCapExceeded):
            next(enumerate_algebras(2, Z2, cap=10))

    def test_compatible_modules(self, i2):
        """
        Test that only compatible actions are returned
        """
        modules = enumerate_compatible_modules(mu_tilde(i2), 1)
        assert modules, "the zero module is compatible"
        for module in modules:
            report = module_report(module)
            assert report.action_ok and report.compatible, "incompatible module returned"
            assert module.dim <= 1, "dimension bound exceeded"


class TestModules:
    """
    Test modules, morphisms and properties of weak monads
    """

    def test_free_module(self, i2):
        """
        Test that the free module is compatible exactly when μ is
        """
        assert not module_report(free_module(i2, 1)).compatible, "μ is not compatible"
        assert module_report(free_module(mu_tilde(i2), 1)).compatible, "μ̃ is compatible"
        assert module_report(free_module(i2, 2)).action_ok, "μ⊗id is an action"

    def test_morphism(self, i2):
        """
        Test the identity and the zero map as monad morphisms
        """
        assert monad_morphism_report(MonadMorphism(i2, i2, identity(Z2, 2))).holds, "id"
        report = monad_morphism_report(MonadMorphism(i2, i2, zero_map(Z2, 2, 2)))
        assert report.product_ok and not report.unit_ok, "0 keeps μ but not η"

    def test_regularity_consequences(self, i2):
        """
        Test the identities implied by a regular η and a compatible μ
        """
        report = regularity_consequences(i2)
        assert report.holds, f"failures: {report.failures()}"
        assert "mult-absorbs-theta" not in report.results, "μ is not compatible"
        assert "mult-absorbs-theta" in regularity_consequences(mu_tilde(i2)).results, (
            "μ̃ is compatible"
        )

    def test_weak_monad_properties(self, i2):
        """
        Test ϑ as a monad morphism and the module retractions
        """
        tilde = mu_tilde(i2)
        report = weak_monad_properties(tilde, [free_module(tilde, 1)])
        assert report.holds, f"failures: {report.failures()}"
        assert "retraction-idempotent[0]" in report.flags(), "module flags are indexed"
        with pytest.raises(PreconditionViolated):
            weak_monad_properties(i2)

    def test_action_on_functor(self, i2):
        """
        Test the factorization of an action through compatible modules
        """
        tilde = mu_tilde(i2)
        assert module_action_on_functor_check(tilde, 2, tilde.m).lifted is not None, "lifts"
        report = module_action_on_functor_check(i2, 2, i2.m)
        assert report.module and not report.compatible, "an action, not compatible"
        assert report.lifted is None, "no factorization"


class TestOracle:
    """
    Test the hom-set oracle against the flags
    """

    def test_weak(self, i2):
        """
        Test that α and β are regular for a weak monad
        """
        report = module_pairing_oracle(mu_tilde(i2), dims=1)
        assert report.flags_regular and report.pointwise_regular, "regular pairing"
        assert report.agrees and report.counterexample is None, "oracle disagrees"

    def test_not_compatible(self, i2):
        """
        Test that the oracle sees the failing compatibility
        """
        report = module_pairing_oracle(i2, dims=1)
        assert not report.flags_regular, "μ is not compatible"
        assert not report.domain_ok, "the free module is not compatible"
        assert report.agrees, "oracle disagrees"
