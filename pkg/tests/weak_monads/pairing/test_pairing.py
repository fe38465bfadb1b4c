"""
Test dual pairings, their comparison functors and the hom-set oracle

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
from itertools import product

# Test
import pytest

# Exact linear algebra
from weak_monads.linalg import ExactRing, LinMap, compose, enumerate_maps, identity

# Monadics
from weak_monads.monadics import law_report

# Comonadics
from weak_monads.comonadics import law_report_co

# Pairing
from weak_monads.pairing import (
    Direction,
    DualPairing,
    HomShapeMismatch,
    PreconditionViolated,
    comparison_check,
    enumerate_pairings,
    h_cell,
    homset_oracle,
    induced_comonad,
    induced_monad,
    k_cell,
    natural_endomorphism_identities,
    pairing_report,
    regularity_consequences,
    regularize_alpha,
    regularize_beta,
    related_adjunction,
    sample_pairings,
    transpose,
)

# Constants
from tests.constants import P2_EPS, P2_ETA

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


Z2 = ExactRing.zn(2)
Z3 = ExactRing.zn(3)


@pytest.fixture
def p2() -> DualPairing:
    """η = e1⊗e1 and ε pairing e1 with e1 only"""
    return DualPairing(Z2, 2, 2, LinMap.from_rows(Z2, P2_ETA), LinMap.from_rows(Z2, P2_EPS))


@pytest.fixture
def half_regular() -> DualPairing:
    """η = 1, ε = 0 on Z3: β regular, α not"""
    return DualPairing(Z3, 1, 1, LinMap.from_rows(Z3, [[1]]), LinMap.from_rows(Z3, [[0]]))


class TestPairing:
    """
    Test the construction of pairings and the transposition of morphisms
    """

    def test_shapes(self):
        """
        Test that η and ε must fit the carriers
        """
        with pytest.raises(HomShapeMismatch):
            DualPairing(Z2, 2, 1, LinMap.from_rows(Z2, [[1], [0]]), LinMap.from_rows(Z2, [[1]]))

    def test_transpose(self, p2):
        """
        Test α and β on a single morphism
        """
        f = LinMap.from_rows(Z2, [[1, 0]])
        # α(f) = R(f)·η: e1⊗e1 ↦ e1⊗f(e1)
        assert transpose(p2, Direction.ALPHA, f, 1, 1) == LinMap.from_rows(
            Z2, [[1], [0]]
        ), "α(f) = f(e1)·e1"
        g = LinMap.from_rows(Z2, [[0], [1]])
        assert transpose(p2, "beta", g, 1, 1).is_zero(), "ε(a⊗e2) = 0"

    def test_transpose_shape(self, p2):
        """
        Test that a morphism outside the hom-set is refused
        """
        with pytest.raises(HomShapeMismatch):
            transpose(p2, Direction.ALPHA, identity(Z2, 3), 1, 1)


class TestReport:
    """
    Test regularity, symmetry and the adjunction flags
    """

    def test_p2(self, p2):
        """
        Test a regular pairing that is neither symmetric nor an adjunction
        """
        report = pairing_report(p2)
        assert report.alpha_regular and report.beta_regular and report.regular, "regular"
        assert not report.alpha_symmetric, "ϑ(e1⊗e2) = 0 but ϑ̲(e1⊗e2) = e1⊗e2"
        assert not report.beta_symmetric, "γ != γ̲"
        assert not report.semiadjoint and not report.adjunction, "k(e2) = 0"
        assert set(report.flags()) == {
            "alpha-regular",
            "beta-regular",
            "alpha-symmetric",
            "beta-symmetric",
            "semiadjoint",
            "adjunction",
        }, "dashed flag names"

    def test_half_regular(self, half_regular):
        """
        Test the scalar pairing η = 1, ε = 0
        """
        report = pairing_report(half_regular)
        assert not report.alpha_regular and report.beta_regular, "only β is regular"

    def test_identities(self, p2):
        """
        Test the identities that hold for every pairing
        """
        assert natural_endomorphism_identities(p2).holds, "identities fail on P2"
        for P in sample_pairings(Z3, 1, 2, count=20, seed=11):
            report = natural_endomorphism_identities(P)
            assert report.holds, f"failures {report.failures()} on {P}"

    def test_regularity_consequences(self, p2, half_regular):
        """
        Test the idempotents of a regular pairing
        """
        assert regularity_consequences(p2).holds, "P2 is regular"
        report = regularity_consequences(half_regular)
        assert report.holds, f"failures: {report.failures()}"
        assert "theta-idempotent" not in report.results, "α is not regular"
        assert "gamma-idempotent" in report.results, "β is regular"

    def test_induced(self, p2):
        """
        Test that the induced (co)monad sees the regularity of the pairing
        """
        assert law_report(induced_monad(p2)).unit_regular, "α regular makes η regular"
        assert law_report_co(induced_comonad(p2)).counit_regular, "β regular makes ε regular"


class TestRegularization:
    """
    Test the repair of one component of a pairing
    """

    def test_regularize_alpha(self, half_regular):
        """
        Test η' = ϑ·η when β is regular
        """
        repaired = regularize_alpha(half_regular)
        assert repaired.eta.is_zero(), "ϑ = 0 so η' = 0"
        assert pairing_report(repaired).regular, "the repaired pairing is regular"

    def test_regularize_beta_refused(self, half_regular):
        """
        Test that β' = β·α·β needs α regular
        """
        with pytest.raises(PreconditionViolated) as error:
            regularize_beta(half_regular)
        assert error.value.label == "α·β·α = α", "wrong precondition reported"

    def test_regular_is_fixed(self, p2):
        """
        Test that a regular pairing is left unchanged
        """
        assert regularize_alpha(p2) == p2 and regularize_beta(p2) == p2, "pairing changed"


class TestAdjunction:
    """
    Test the adjunction obtained by splitting an idempotent
    """

    def test_alpha_side(self, p2):
        """
        Test that β̲·α̲ = I after splitting h = εL·Lη
        """
        related = related_adjunction(p2, Direction.ALPHA)
        split = related.pairing
        assert split.a == 1 and split.b == 2, "h has rank one"
        sig = split.signature()
        assert sig.evaluate(h_cell(sig)) == identity(Z2, 1), "h becomes the identity"
        assert not related.adjunction, "k still fails on e2"

    def test_beta_side(self, p2):
        """
        Test that α̲·β̲ = I after splitting k = Rε·ηR
        """
        related = related_adjunction(p2, "beta")
        sig = related.pairing.signature()
        assert related.pairing.b == 1, "k has rank one"
        assert sig.evaluate(k_cell(sig)) == identity(Z2, 1), "k becomes the identity"
        assert pairing_report(related.pairing).semiadjoint, "α̲·β̲ = I"

    def test_refused(self, half_regular):
        """
        Test the α side of a pairing whose α is not regular
        """
        with pytest.raises(PreconditionViolated):
            related_adjunction(half_regular, Direction.ALPHA)

    @pytest.mark.slow
    def test_every_alpha_regular(self):
        """
        Test β̲·α̲ = I on the test homs of every α-regular pairing of Z2² with Z2²
        """
        regular = [P for P in enumerate_pairings(Z2, 2, 2) if pairing_report(P).alpha_regular]
        assert 0 < len(regular) < 256, "some but not all pairings are α-regular"
        for P in regular:
            sig = P.signature()
            related = related_adjunction(P, Direction.ALPHA)
            split = related.pairing
            assert compose(related.i, related.p) == sig.evaluate(h_cell(sig)), f"i·p != h on {P}"
            assert compose(related.p, related.i) == identity(Z2, split.a), f"p·i != I on {P}"
            for a_dim, b_dim in product(range(2), repeat=2):
                for f in enumerate_maps(split.a * a_dim, b_dim, Z2):
                    alpha = transpose(split, Direction.ALPHA, f, a_dim, b_dim)
                    assert (
                        transpose(split, Direction.BETA, alpha, a_dim, b_dim) == f
                    ), f"β̲·α̲(f) != f on {P}"


class TestComparison:
    """
    Test the comparison functors on small test objects
    """

    def test_p2(self, p2):
        """
        Test the triangles and the symmetry diagrams of P2
        """
        report = comparison_check(p2, dims=1)
        assert report.triangle_left and report.triangle_right, "R̂ triangles commute"
        assert report.co_triangle_left and report.co_triangle_right, "L̃ triangles commute"
        assert report.alpha_symmetry_diagram and report.beta_symmetry_diagram, "diagrams"
        assert not report.alpha_symmetric, "the diagram commutes although ϑ != ϑ̲"
        assert report.hatR_lands_compatible and report.hatL_lands_compatible, "compatible"

    def test_half_regular(self, half_regular):
        """
        Test that L̃ leaves the compatible comodules when α is not regular
        """
        report = comparison_check(half_regular, dims=1)
        assert report.hatR_lands_compatible, "β is regular, Rε is compatible"
        assert report.triangle_left and report.triangle_right, "R̂ triangles commute"
        assert not report.hatL_lands_compatible, "Lη is not fixed by Gε·δ"
        assert not report.co_triangle_left, "φ^LR leaves the compatible comodules"
        assert not report.co_triangle_right, "U^LR·L̃ is not defined"

    def test_every_scalar_pairing(self):
        """
        Test the symmetry diagrams on every pairing with one dimensional carriers
        """
        pairings = list(enumerate_pairings(Z2, 1, 1))
        assert len(pairings) == 4, "two quasi-units times two quasi-counits"
        for P in pairings:
            report = comparison_check(P, dims=1)
            assert report.alpha_symmetry_diagram, f"α diagram fails on {P}"
            assert report.beta_symmetry_diagram, f"β diagram fails on {P}"


class TestOracle:
    """
    Test the hom-set oracle against the identity flags
    """

    def test_p2(self, p2):
        """
        Test a regular pairing
        """
        report = homset_oracle(p2, dims=1)
        assert report.alpha_regular and report.beta_regular, "α and β are regular"
        assert report.agrees and report.pairs_checked == 4, "oracle disagrees"

    def test_half_regular(self, half_regular):
        """
        Test that the oracle finds the failing α
        """
        report = homset_oracle(half_regular, dims=1)
        assert not report.alpha_regular and report.beta_regular, "only β is regular"
        assert report.counterexample.startswith("α fails"), "counterexample on α"
        assert report.agrees, "oracle disagrees"

    def test_every_small_pairing(self):
        """
        Test the oracle on every pairing of Z2 with Z2²
        """
        for P in enumerate_pairings(Z2, 1, 2):
            assert homset_oracle(P, dims=1).agrees, f"oracle disagrees on {P}"

    def test_sampling_reproducible(self):
        """
        Test that a seed fixes the sample
        """
        first = list(sample_pairings(Z3, 2, 2, count=5, seed=3))
        assert first == list(sample_pairings(Z3, 2, 2, count=5, seed=3)), "not reproducible"


@pytest.mark.slow
class TestExhaustive:
    """
    Test every pairing of Z2² with Z2²
    """

    def test_oracle(self):
        """
        Test that the hom-set oracle agrees with the flags on all 256 pairings
        """
        pairings = list(enumerate_pairings(Z2, 2, 2))
        assert len(pairings) == 256, "16 quasi-units times 16 quasi-counits"
        for P in pairings:
            assert homset_oracle(P, dims=1).agrees, f"oracle disagrees on {P}"

    def test_induced(self):
        """
        Test that the induced (co)monad flags are the pairing flags
        """
        for P in enumerate_pairings(Z2, 2, 2):
            flags = pairing_report(P)
            monad, comonad = law_report(induced_monad(P)), law_report_co(induced_comonad(P))
            assert monad.unit_regular == flags.alpha_regular, f"η regularity on {P}"
            assert monad.unit_symmetric == flags.alpha_symmetric, f"η symmetry on {P}"
            assert comonad.counit_regular == flags.beta_regular, f"ε regularity on {P}"
            assert comonad.counit_symmetric == flags.beta_symmetric, f"ε symmetry on {P}"

    def test_comparison(self):
        """
        Test that R̂ lands in compatible modules when β is regular, L̃ when α is
        """
        for P in enumerate_pairings(Z2, 2, 2):
            flags, report = pairing_report(P), comparison_check(P, dims=1)
            if flags.beta_regular:
                assert report.hatR_lands_compatible, f"R̂ leaves the compatible modules on {P}"
            if flags.alpha_regular:
                assert report.hatL_lands_compatible, f"L̃ leaves the compatible comodules on {P}"
            assert report.triangle_right == report.hatR_lands_compatible, f"U_RL·R̂ on {P}"
            assert report.co_triangle_right == report.hatL_lands_compatible, f"U^LR·L̃ on {P}"
