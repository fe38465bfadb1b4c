"""
Test entwinings, the liftings they induce and the entwined (co)products

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
from weak_monads.linalg import ExactRing, LinMap, compose, identity, tensor

# Monadics
from weak_monads.monadics import AlgebraModule, QUnitalAlgebra, free_module, module_report

# Comonadics
from weak_monads.comonadics import QCounitalCoalgebra, free_comodule

# Entwining
from weak_monads.entwine import (
    ComoduleEntwining,
    InvalidEntwining,
    ModuleEntwining,
    PreconditionViolated,
    chi,
    entwined_coproduct,
    entwined_product,
    entwining_from_action,
    equivalence_scan,
    f_reg_report,
    lift_comodule,
    lift_module,
    lifting_report_comodules,
    lifting_report_modules,
    normalize,
    product_morphisms_report,
    roundtrip_report,
)

# Utilities
from weak_monads.utilities import ScanRunner

# Constants
from tests.constants import (
    C2_TILDE_COPRODUCT,
    COUNIT_E1,
    I2_PRODUCT,
    I2_THETA,
    I2_TILDE_PRODUCT,
    SWAP,
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


FLIP_NORMALIZED = [[1, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]
"""l⊗t ↦ t⊗ϑ(l): only e1⊗t survives, as t⊗e1"""


def rows(entries) -> LinMap:
    return LinMap.from_rows(Z2, entries)


@pytest.fixture
def tilde() -> QUnitalAlgebra:
    """Weak monad a⊗b ↦ a·e1·b on Z2²"""
    return QUnitalAlgebra(Z2, 2, rows(I2_TILDE_PRODUCT), rows(UNIT_E1))


@pytest.fixture
def co_tilde() -> QCounitalCoalgebra:
    """Weak comonad e1 ↦ e1⊗e1, e2 ↦ 0 on Z2²"""
    return QCounitalCoalgebra(Z2, 2, rows(C2_TILDE_COPRODUCT), rows(COUNIT_E1))


@pytest.fixture
def flip(tilde) -> ModuleEntwining:
    """λ: l⊗t ↦ t⊗l with L, F and T all carried by the weak monad"""
    return ModuleEntwining(tilde, tilde, 2, rows(SWAP))


@pytest.fixture
def co_flip(co_tilde) -> ComoduleEntwining:
    return ComoduleEntwining(co_tilde, co_tilde, 2, rows(SWAP))


class TestEntwining:
    """
    Test the construction and the normalization of entwinings
    """

    def test_shape(self, tilde):
        """
        Test that λ must be a (t·f)×(l·t) map
        """
        with pytest.raises(InvalidEntwining):
            ModuleEntwining(tilde, tilde, 1, rows(SWAP))

    def test_normalize(self, flip):
        """
        Test Tϑ·λ for the flip
        """
        normalized = normalize(flip)
        assert normalized.lam == rows(FLIP_NORMALIZED), "Tϑ·λ(l⊗t) = t⊗ϑ(l)"
        assert normalize(normalized) == normalized, "normalizing is idempotent"
        assert flip.lam == rows(SWAP), "the original entwining is unchanged"

    def test_chi(self, flip, tilde):
        """
        Test that χ = Tμ·λF is l⊗t⊗f ↦ t⊗l·e1·f
        """
        action = chi(flip)
        assert action.shape == (4, 8), "χ: LTF → TF"
        recovered = entwining_from_action(tilde, tilde, 2, action)
        assert recovered.lam == normalize(flip).lam, "λ' = ϱF·LTη is the normalized λ"


class TestLifting:
    """
    Test the lifting of modules and comodules along an entwining
    """

    def test_flip_lifts(self, flip):
        """
        Test that the flip lifts without satisfying the triangles
        """
        report = lifting_report_modules(flip)
        assert report.diagram_lift_equ and report.equation_lift_equ_reg, "the flip lifts"
        assert report.lifts, "lift-equ and lift-equ-reg hold"
        assert not report.flags()["lift-left-triangle"], "λ(ϑ(e2)⊗t) = 0 != t⊗e2"
        assert not report.weak_diagrams, "the triangles fail"

    def test_normalized_satisfies_diagrams(self, flip):
        """
        Test that the normalized flip satisfies the rectangle and both triangles
        """
        report = lifting_report_modules(normalize(flip))
        assert report.lifts and report.weak_diagrams, f"flags: {report.flags()}"

    def test_lift_module(self, flip, tilde):
        """
        Test that the free module lifts to a compatible L-module
        """
        lifted = lift_module(flip, free_module(tilde, 1))
        report = module_report(lifted)
        assert lifted.dim == 4, "T(A) has dimension t·dim A"
        assert report.action_ok and report.compatible, "the lift is a compatible module"
        assert f_reg_report(flip, [free_module(tilde, 1)]).holds, "f-reg fails"

    def test_lift_refused(self, flip, tilde):
        """
        Test that an action breaking the action law is not lifted
        """
        with pytest.raises(PreconditionViolated):
            lift_module(flip, AlgebraModule(tilde, 1, rows([[1, 1]])))

    def test_comodules(self, co_flip, co_tilde):
        """
        Test the dual flip on comodules
        """
        report = lifting_report_comodules(co_flip)
        assert report.lifts, "the flip lifts comodules"
        assert not report.flags()["colift-left-triangle"], "ψ·Tγ != ψ"
        assert lifting_report_comodules(normalize(co_flip)).weak_diagrams, "normalized"
        lifted = lift_comodule(co_flip, free_comodule(co_tilde, 1))
        assert lifted.dim == 4, "T(B) has dimension t·dim B"


class TestRoundtrip:
    """
    Test λ → χ → λ' → χ' → λ''
    """

    @pytest.mark.parametrize("fixture", ["flip", "co_flip"])
    def test_roundtrip(self, fixture, request):
        """
        Test that the recovered entwining is the normalized one and lifts the same way
        """
        report = roundtrip_report(request.getfixturevalue(fixture), dims=1)
        assert report.action_ok, "the induced (co)action is compatible and natural"
        assert report.normalized_matches and report.stable, "λ' = Tϑ·λ = λ''"
        assert report.same_lifts and report.witness is None, "liftings differ"
        assert report.objects_checked > 0, "no test object"


class TestEntwinedProduct:
    """
    Test the product and coproduct built from an entwining
    """

    def test_flip_weak_without_diagrams(self, tilde):
        """
        Test that the flip gives a weak monad while a triangle fails
        """
        product = entwined_product(tilde, tilde, rows(SWAP))
        assert product.algebra is not None and product.weak, "tensor product of weak monads"
        assert product.results["end-rect"], "the rectangle commutes"
        assert not product.results["end-left-triangle"], "λ·ϑT fails on e2⊗t"
        assert not product.diagrams, "weak does not imply the diagrams"

    def test_normalized_flip(self, tilde):
        """
        Test that a λ built from ϑ on both sides satisfies every diagram
        """
        theta = rows(I2_THETA)
        # λ(f⊗t) = ϑ(t)⊗ϑ(f)
        lam = compose(tensor(theta, theta), rows(SWAP))
        product = entwined_product(tilde, tilde, lam)
        assert product.diagrams and product.weak, f"flags: {product.flags()}"

    def test_not_weak_refused(self, tilde):
        """
        Test that both factors must be weak monads
        """
        pointwise = QUnitalAlgebra(Z2, 2, rows(I2_PRODUCT), rows(UNIT_E1))
        with pytest.raises(PreconditionViolated):
            entwined_product(pointwise, tilde, rows(SWAP))
        with pytest.raises(InvalidEntwining):
            entwined_product(tilde, tilde, identity(Z2, 2))

    def test_morphisms(self, tilde):
        """
        Test the inclusions of the factors into the entwined product
        """
        from_f, from_t = product_morphisms_report(tilde, tilde, rows(SWAP))
        assert from_f.holds and from_t.holds, "inclusions are monad morphisms"

    def test_coproduct(self, co_tilde):
        """
        Test the dual flip on the coproduct side
        """
        coproduct = entwined_coproduct(co_tilde, co_tilde, rows(SWAP))
        assert coproduct.coalgebra is not None and coproduct.weak, "weak comonad"
        assert not coproduct.diagrams, "a triangle fails"


class TestEquivalenceScan:
    """
    Test the exhaustive comparison of weakness and diagrams
    """

    def test_dimension_one(self):
        """
        Test the two entwinings of the unital algebra Z2
        """
        unital = QUnitalAlgebra(Z2, 1, rows([[1]]), rows([[1]]))
        scan = equivalence_scan(unital, unital, runner=ScanRunner(chunk=1))
        assert scan.candidates == 2, "λ ∈ {0, 1}"
        assert scan.equivalent and scan.counterexample is None, "both sides agree"
        assert scan.indices("weak") == [0, 1], "both products are weak"

    @pytest.mark.slow
    def test_weak_does_not_imply_diagrams(self, tilde):
        """
        Test every λ on the weak monad of dimension two
        """
        scan = equivalence_scan(tilde, tilde)
        assert scan.candidates == 2 ** 16, "every 4x4 map over Z2"
        assert scan.diagrams_imply_weak, "the diagrams make the product weak"
        assert not scan.weak_implies_diagrams, "the flip is a counterexample"
        assert entwined_product(tilde, tilde, scan.counterexample).weak, "not weak"
