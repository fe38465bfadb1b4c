"""
Test q-counital comonads, their duality with monads and weak corings

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
from weak_monads.linalg import ExactRing, LinMap

# Monadics
from weak_monads.monadics import QUnitalAlgebra, law_report

# Comonadics
from weak_monads.comonadics import (
    ComonadClass,
    InvalidStructure,
    PreconditionViolated,
    QCounitalCoalgebra,
    WeakCoring,
    coalgebra_dictionary,
    comodule_pairing_oracle,
    comodule_report,
    coring_report,
    delta_hat,
    delta_tilde,
    enumerate_coalgebras,
    eps_tilde,
    free_comodule,
    is_coring,
    law_report_co,
    regularity_consequences_co,
    search_coring_flag_split,
    transpose_dual,
    weak_comonad_properties,
)

# Constants
from tests.constants import (
    C2_COPRODUCT,
    C2_TILDE_COPRODUCT,
    COUNIT_E1,
    I2_PRODUCT,
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


def rows(entries) -> LinMap:
    return LinMap.from_rows(Z2, entries)


@pytest.fixture
def c2() -> QCounitalCoalgebra:
    """Group-like coproduct on Z2² with ε = δ_{e1}"""
    return QCounitalCoalgebra(Z2, 2, rows(C2_COPRODUCT), rows(COUNIT_E1))


@pytest.fixture
def c3() -> QCounitalCoalgebra:
    return transpose_dual(QUnitalAlgebra(Z2, 3, rows(I3_PRODUCT), rows(I3_UNIT)))


@pytest.fixture
def ground() -> QUnitalAlgebra:
    """Z2 as a unital algebra over itself"""
    return QUnitalAlgebra(Z2, 1, rows([[1]]), rows([[1]]))


class TestLawReport:
    """
    Test the flags and the classification of comonads
    """

    def test_group_like(self, c2):
        """
        Test the group-like coalgebra with ε = δ_{e1}
        """
        report = law_report_co(c2)
        assert report.coassoc and report.counit_regular, "ε(e1) = ε(e1)ε(e1)"
        assert report.counit_symmetric, "the coproduct is cocommutative"
        assert not report.comult_compatible, "Δ(e2) = e2⊗e2 but e2ε(e2)⊗e2 = 0"
        assert report.classification is ComonadClass.Q_COUNITAL, "not compatible"

    def test_upper_triangular_dual(self, c3):
        """
        Test the dual of the upper triangular matrices
        """
        report = law_report_co(c3)
        assert report.counit_regular and not report.counit_symmetric, "regular only"
        assert not report.comult_compatible, "dual of a non compatible product"

    def test_not_coassociative(self):
        """
        Test that a coproduct breaking coassociativity is refused
        """
        # transpose of a non associative product
        with pytest.raises(InvalidStructure):
            QCounitalCoalgebra(Z2, 2, rows([[0, 1], [0, 0], [1, 0], [0, 0]]), rows(COUNIT_E1))


class TestDuality:
    """
    Test that transposition exchanges monad and comonad flags
    """

    @pytest.mark.parametrize(
        "product, unit", [(I2_PRODUCT, UNIT_E1), (I3_PRODUCT, I3_UNIT)]
    )
    def test_flags_exchanged(self, product, unit):
        """
        Test each flag against its transposed counterpart
        """
        F = QUnitalAlgebra(Z2, len(unit), rows(product), rows(unit))
        monad, comonad = law_report(F), law_report_co(transpose_dual(F))
        assert monad.unit_regular == comonad.counit_regular, "regularity not exchanged"
        assert monad.unit_symmetric == comonad.counit_symmetric, "symmetry not exchanged"
        assert monad.mult_compatible == comonad.comult_compatible, "compatibility not exchanged"
        assert monad.classification.level == comonad.classification.level, "classes differ"

    def test_involution(self, c2):
        """
        Test that dualizing twice gives the structure back
        """
        assert transpose_dual(transpose_dual(c2)) == c2, "transpose is an involution"
        assert transpose_dual(c2).m == rows(I2_PRODUCT), "dual of group-like is pointwise"

    def test_modules(self, c2):
        """
        Test that free comodules dualize to free modules
        """
        module = transpose_dual(free_comodule(c2, 1))
        assert module.rho == rows(I2_PRODUCT), "dual of Δ is the pointwise product"

    def test_nothing_to_dualize(self):
        """
        Test the refusal of other objects
        """
        with pytest.raises(InvalidStructure):
            transpose_dual(rows([[1]]))


class TestConstructions:
    """
    Test the repair constructions of comonads
    """

    def test_delta_tilde(self, c2):
        """
        Test that δ̃ keeps only e1 ↦ e1⊗e1 and gives a weak comonad
        """
        tilde = delta_tilde(c2)
        assert tilde.delta == rows(C2_TILDE_COPRODUCT), "δ̃(c) = Σ c1ε(c2) ⊗ c3"
        assert law_report_co(tilde).classification is ComonadClass.WEAK, "weak comonad"

    def test_delta_hat(self, c3):
        """
        Test that δ̂ makes the r-counital repair of the dual weak
        """
        tilde = delta_tilde(c3)
        assert law_report_co(tilde).classification is ComonadClass.R_COUNITAL, "r-counital"
        assert law_report_co(delta_hat(tilde)).classification is ComonadClass.WEAK, "weak"

    def test_preconditions(self, c2):
        """
        Test the refusals outside the hypotheses
        """
        with pytest.raises(PreconditionViolated) as error:
            eps_tilde(c2)
        assert error.value.label == "δ not compatible", "wrong precondition reported"
        with pytest.raises(PreconditionViolated):
            delta_hat(c2)
        assert eps_tilde(delta_tilde(c2)).eps == c2.eps, "ε(e1)ε(e1) = ε(e1)"


class TestDictionary:
    """
    Test the Sweedler reading of the flags
    """

    @pytest.mark.parametrize("fixture", ["c2", "c3"])
    def test_agrees(self, fixture, request):
        """
        Test that every flag matches its Sweedler criterion
        """
        report = coalgebra_dictionary(request.getfixturevalue(fixture))
        assert report.consistent, "the dictionary is consistent"
        assert set(report.constructions) == {
            "delta-tilde-sweedler",
            "delta-hat-sweedler",
        }, "both repairs are read"
        assert "coproduct-middle-leg" in report.matching_readings, "middle leg reading"

    def test_group_like_readings(self, c2):
        """
        Test that neither reading holds for the group-like coproduct
        """
        report = coalgebra_dictionary(c2)
        assert report.readings == {
            "coproduct-middle-leg": False,
            "coproduct-last-leg": False,
        }, "e2 breaks both readings"

    def test_dimension_one(self):
        """
        Test the four coalgebras on Z2
        """
        coalgebras = list(enumerate_coalgebras(1, Z2))
        assert len(coalgebras) == 4, "two coproducts times two quasi-counits"
        for G in coalgebras:
            assert coalgebra_dictionary(G).consistent, f"inconsistent on {G}"


class TestComodules:
    """
    Test comodules and the properties of weak comonads
    """

    def test_free_comodule(self, c2):
        """
        Test that the free comodule is compatible exactly when δ is
        """
        assert not comodule_report(free_comodule(c2, 1)).compatible, "δ is not compatible"
        report = comodule_report(free_comodule(delta_tilde(c2), 1))
        assert report.coaction_ok and report.compatible, "δ̃ is compatible"

    def test_properties(self, c2):
        """
        Test the identities of regular and weak comonads
        """
        assert regularity_consequences_co(c2).holds, "ε is regular"
        tilde = delta_tilde(c2)
        report = weak_comonad_properties(tilde, [free_comodule(tilde, 1)])
        assert report.holds, f"failures: {report.failures()}"
        with pytest.raises(PreconditionViolated):
            weak_comonad_properties(c2)

    def test_oracle(self, c2):
        """
        Test the hom-set oracle of comodules
        """
        report = comodule_pairing_oracle(delta_tilde(c2), dims=1)
        assert report.flags_regular and report.agrees, "weak comonad, regular pairing"
        assert comodule_pairing_oracle(c2, dims=1).agrees, "oracle disagrees"


class TestCoring:
    """
    Test weak corings over a unital algebra
    """

    def test_ordinary_coring(self, ground):
        """
        Test the ground ring as a coring over itself
        """
        C = WeakCoring(ground, 1, rows([[1]]), rows([[1]]), rows([[1]]), rows([[1]]))
        report = coring_report(C)
        assert report.weak_coring and report.pre_coring and report.coring, "a coring"
        assert report.unitality_of_delta and report.restricted_coring_ok, "unital"
        assert is_coring(C), "counital coring"

    def test_weak_not_pre(self, ground):
        """
        Test a zero left action: Σ ε(c1)c2 = 0 = 1_A·c but c != 0
        """
        C = WeakCoring(ground, 1, rows([[0]]), rows([[1]]), rows([[1]]), rows([[0]]))
        report = coring_report(C, restriction=False)
        assert report.weak_coring and not report.pre_coring, "weak coring only"
        assert report.restricted_coring_ok is None, "no restriction requested"

    def test_invalid_bimodule(self, ground):
        """
        Test that a non unital right action is refused
        """
        with pytest.raises(InvalidStructure):
            WeakCoring(ground, 1, rows([[1]]), rows([[0]]), rows([[1]]), rows([[1]]))

    def test_flag_split(self, ground):
        """
        Test that every pre-coring found is also a weak coring
        """
        split = search_coring_flag_split(ground, 1)
        assert split.weak_not_pre is not None, "a weak coring that is not a pre-coring"
        assert split.pre_not_weak is None, "pre-corings are weak corings"
        assert not coring_report(split.weak_not_pre, restriction=False).pre_coring, "split"
