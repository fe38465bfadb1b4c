"""
Test mixed distributive laws between a weak monad and a weak comonad

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
from weak_monads.monadics import QUnitalAlgebra

# Comonadics
from weak_monads.comonadics import QCounitalCoalgebra

# Mixed
from weak_monads.mixed import (
    LAWS,
    InvalidMixedLaw,
    MixedDistributiveLaw,
    PreconditionViolated,
    alt_counit,
    alt_unit,
    comonad_on_modules,
    counit_consequences,
    kappa_tau_commute,
    kappa_tau_properties,
    lift_comonad_to_modules,
    lift_monad_to_comodules,
    mixed_report,
    mixed_scan,
    monad_on_comodules,
    pre_counit_report,
    pre_unit_report,
    unit_consequences,
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
    OMEGA_0,
    SWAP,
    UNIT_E1,
    ZERO_4,
)

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


Z2 = ExactRing.zn(2)

E11 = [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
"""κ̂ and τ̂ of the normalized swap"""


def rows(entries) -> LinMap:
    return LinMap.from_rows(Z2, entries)


@pytest.fixture
def F() -> QUnitalAlgebra:
    return QUnitalAlgebra(Z2, 2, rows(I2_TILDE_PRODUCT), rows(UNIT_E1))


@pytest.fixture
def G() -> QCounitalCoalgebra:
    return QCounitalCoalgebra(Z2, 2, rows(C2_TILDE_COPRODUCT), rows(COUNIT_E1))


@pytest.fixture
def w0(F, G) -> MixedDistributiveLaw:
    """Swap normalized on both sides"""
    return MixedDistributiveLaw(F, G, rows(OMEGA_0))


@pytest.fixture
def trivial() -> MixedDistributiveLaw:
    """Identity law between the unital algebra and the counital coalgebra Z2"""
    one = rows([[1]])
    return MixedDistributiveLaw(
        QUnitalAlgebra(Z2, 1, one, one), QCounitalCoalgebra(Z2, 1, one, one), one
    )


class TestMixedLaw:
    """
    Test the validation of mixed distributive laws
    """

    def test_weak_required(self, G):
        """
        Test that F must be a weak monad
        """
        pointwise = QUnitalAlgebra(Z2, 2, rows(I2_PRODUCT), rows(UNIT_E1))
        with pytest.raises(InvalidMixedLaw):
            MixedDistributiveLaw(pointwise, G, rows(OMEGA_0))

    def test_shape(self, F, G):
        """
        Test that ω must be a (g·f)×(f·g) map
        """
        with pytest.raises(InvalidMixedLaw):
            MixedDistributiveLaw(F, G, rows(I2_THETA))


class TestReport:
    """
    Test the diagrams of a mixed distributive law
    """

    def test_normalized_swap(self, w0):
        """
        Test that every diagram commutes and the induced maps
        """
        report = mixed_report(w0)
        assert all(report.flags().values()), f"flags: {report.flags()}"
        assert report.lifts_to_modules and report.lifts_to_comodules, "both liftings"
        assert report.xi == rows(I2_THETA), "ξ = εF·ω·ηG keeps e1 only"
        assert report.kappa_hat == rows(E11), "κ̂ keeps e1⊗e1 only"
        assert report.tau_hat == rows(E11), "τ̂ keeps e1⊗e1 only"

    def test_raw_swap(self, F, G):
        """
        Test that the raw swap breaks the monad square
        """
        report = mixed_report(MixedDistributiveLaw(F, G, rows(SWAP)))
        assert not report.mon_square, "ω·ϑG != ω on e2⊗g"
        assert not report.lifts_to_modules, "no lifting to modules"

    def test_zero(self, F, G):
        """
        Test that ω = 0 breaks only (cond-ve) and (eta-unit)
        """
        flags = mixed_report(MixedDistributiveLaw(F, G, rows(ZERO_4))).flags()
        failing = {name for name, holds in flags.items() if not holds}
        assert failing == {"cond_ve", "eta_unit"}, f"failing: {failing}"

    def test_trivial(self, trivial):
        """
        Test that the identity law satisfies every diagram
        """
        assert all(mixed_report(trivial).flags().values()), "identity law"

    def test_labels(self):
        """
        Test the labels of the pre-unit diagrams
        """
        assert LAWS["cond-ve"] == "ϑ·Fε = εF·ω", "label changed"
        assert LAWS["eta-unit"] == "ω·ηG = Gη·γ", "label changed"


class TestKappaTau:
    """
    Test the endomorphisms κ̂ and τ̂
    """

    def test_properties(self, w0):
        """
        Test the four identities and the idempotency of κ̂ and τ̂
        """
        report = kappa_tau_properties(w0)
        assert report.holds, f"failures: {report.failures()}"
        assert {"kappa-idempotent", "tau-idempotent"} <= set(report.results), "idempotency"
        assert kappa_tau_commute(w0), "κ̂·ω = ω·τ̂"

    def test_consequences(self, w0):
        """
        Test the identities following from (cond-ve) and (eta-unit)
        """
        assert counit_consequences(w0).holds, "τ̂ = ϑγ"
        assert unit_consequences(w0).holds, "κ̂ = γϑ"

    def test_consequences_refused(self, F, G):
        """
        Test that a failing (cond-ve) is reported by its label
        """
        zero = MixedDistributiveLaw(F, G, rows(ZERO_4))
        with pytest.raises(PreconditionViolated) as error:
            counit_consequences(zero)
        assert error.value.label == LAWS["cond-ve"], "wrong precondition reported"


class TestLifting:
    """
    Test the comonad on modules and the monad on comodules
    """

    def test_lifted(self, w0):
        """
        Test the lifted comonad and monad on the test families
        """
        lifted = lift_comonad_to_modules(w0, dims=1)
        assert lifted.objects_checked > 0 and lifted.holds, f"failures: {lifted.failures()}"
        lifted = lift_monad_to_comodules(w0, dims=1)
        assert lifted.objects_checked > 0 and lifted.holds, f"failures: {lifted.failures()}"

    def test_lifting_refused(self, F, G):
        """
        Test that the raw swap cannot be lifted
        """
        with pytest.raises(PreconditionViolated):
            lift_comonad_to_modules(MixedDistributiveLaw(F, G, rows(SWAP)), dims=1)

    @pytest.mark.parametrize("omega", [OMEGA_0, ZERO_4])
    def test_pre_units(self, F, G, omega):
        """
        Test that the statements on objects, on the free object and the diagram agree
        """
        W = MixedDistributiveLaw(F, G, rows(omega))
        counit, unit = pre_counit_report(W, dims=1), pre_unit_report(W, dims=1)
        assert counit.agrees and unit.agrees, "statements disagree"
        assert counit.diagram == (omega == OMEGA_0), "(cond-ve) holds for the normalized swap"

    def test_alternatives(self, w0):
        """
        Test ε̄ = φ·ξ and η̂ = ξ·υ
        """
        counit, unit = alt_counit(w0, dims=1), alt_unit(w0, dims=1)
        assert counit.agrees and unit.agrees, "morphism property disagrees with the diagram"
        assert counit.consequence and unit.consequence, "consequences of the diagrams"

    def test_structures(self, trivial):
        """
        Test the comonad on modules and the monad on comodules of the identity law
        """
        comonad = comonad_on_modules(trivial, dims=1)
        assert comonad.weak and comonad.formulas_agree, f"results: {dict(comonad.results)}"
        monad = monad_on_comodules(trivial, dims=1)
        assert monad.weak and monad.formulas_agree, f"results: {dict(monad.results)}"


class TestScan:
    """
    Test the exhaustive scan of mixed distributive laws
    """

    def test_dimension_one(self, trivial):
        """
        Test ω ∈ {0, 1} for the unital algebra and counital coalgebra Z2
        """
        scan = mixed_scan(trivial.F, trivial.G, runner=ScanRunner(chunk=1))
        assert scan.candidates == 2, "two scalars"
        assert all(scan.implications.values()), f"implications: {scan.implications}"
        assert scan.matching(["cond_ve", "eta_unit"]) == [1], "ω = 0 breaks both"
        assert scan.candidate(1).omega == rows([[1]]), "candidates in map order"

    @pytest.mark.slow
    def test_dimension_two(self, F, G):
        """
        Test every ω between the weak monad and comonad on Z2²
        """
        scan = mixed_scan(F, G)
        assert scan.candidates == 2 ** 16, "every 4x4 map over Z2"
        assert all(scan.implications.values()), f"implications: {scan.implications}"
        every = scan.matching(
            ["mon_rect", "mon_square", "com_rect", "com_square", "cond_ve", "eta_unit"]
        )
        assert any(scan.candidate(index).omega == rows(OMEGA_0) for index in every), "ω₀"
