"""
Test the exact linear algebra layer

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
from fractions import Fraction
from itertools import islice

# Test
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Exact linear algebra
from weak_monads.linalg import (
    DimensionMismatch,
    EnumerationCapExceeded,
    ExactRing,
    InvalidRing,
    LinMap,
    NotIdempotent,
    RingMismatch,
    SplittingFailed,
    SplittingUnsupported,
    compose,
    count_maps,
    enumerate_maps,
    hstack,
    identity,
    in_column_space,
    rank,
    split_idempotent,
    tensor,
    zero_map,
)

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


Z2 = ExactRing.zn(2)
Z3 = ExactRing.zn(3)
Z4 = ExactRing.zn(4)
Q = ExactRing.rationals()


def maps(ring: ExactRing, rows: int, cols: int):
    """Strategy drawing maps R^cols → R^rows with small entries"""
    return st.lists(
        st.lists(st.integers(-6, 6), min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(lambda entries: LinMap.from_rows(ring, entries, (rows, cols)))


@st.composite
def rational_idempotents(draw, max_size: int = 3):
    """
    Strategy drawing (e, r) with e = i∘p an idempotent of rank r over Q,
    built from i = [I; X] and p = [I - YX, Y] up to a permutation of the basis
    """
    n = draw(st.integers(1, max_size))
    r = draw(st.integers(0, n))
    entries = st.fractions(min_value=-4, max_value=4, max_denominator=5)
    x = LinMap.from_rows(
        Q, [[draw(entries) for _ in range(r)] for _ in range(n - r)], (n - r, r)
    )
    y = LinMap.from_rows(
        Q, [[draw(entries) for _ in range(n - r)] for _ in range(r)], (r, n - r)
    )
    order = draw(st.permutations(range(n)))
    swap = LinMap.from_rows(Q, [[int(j == k) for j in range(n)] for k in order])

    i = compose(swap, hstack(identity(Q, r), x.transpose()).transpose())
    p = compose(hstack(identity(Q, r) - compose(y, x), y), swap.transpose())
    return compose(i, p), r


class TestRing:
    """
    Test ring descriptors and scalars
    """

    def test_parse(self):
        """
        Test the accepted descriptors
        """
        assert ExactRing.parse("Z2") == Z2, "Z2 not parsed"
        assert ExactRing.parse("Z_3") == Z3, "Z_3 not parsed"
        assert ExactRing.parse(" QQ ").is_rational, "QQ not parsed"
        with pytest.raises(InvalidRing):
            ExactRing.parse("R")

    def test_field(self):
        """
        Test which rings are fields
        """
        assert Z2.is_field and Z3.is_field and Q.is_field, "prime fields not recognised"
        assert not Z4.is_field, "Z4 is not a field"

    def test_element(self):
        """
        Test the interpretation of scalars
        """
        assert Q.element("3/6") == Fraction(1, 2), "fractions must be reduced"
        assert Z3.element("1/2") == 2, "1/2 is 2 in Z3"
        assert Z2.element(-1) == 1, "-1 is 1 in Z2"
        with pytest.raises(InvalidRing):
            Z3.element("1/3")

    def test_serialize(self):
        """
        Test the JSON form of scalars
        """
        assert Q.serialize(Fraction(-2, 4)) == "-1/2", "rationals are written as p/q"
        assert Z3.serialize(Z3.element(5)) == 2, "Z_n scalars are written as integers"


class TestLinMap:
    """
    Test maps, composition and Kronecker products
    """

    def test_shape(self):
        """
        Test shapes and their checks
        """
        f = LinMap.from_rows(Z2, [[1, 0, 1]])
        assert f.shape == (1, 3), "a 1x3 map goes from R^3 to R"
        assert zero_map(Z2, 0, 2).shape == (0, 2), "empty maps keep their shape"
        with pytest.raises(DimensionMismatch):
            LinMap.from_rows(Z2, [[1, 0], [1]])
        with pytest.raises(DimensionMismatch):
            compose(f, f)
        with pytest.raises(RingMismatch):
            compose(identity(Z3, 3), LinMap.from_rows(Z2, [[1], [0], [1]]))

    def test_entries_reduced(self):
        """
        Test that entries are kept in canonical form
        """
        assert LinMap.from_rows(Z3, [[4, -1]]) == LinMap.from_rows(Z3, [[1, 2]]), "mod 3"
        assert LinMap.from_rows(Q, [["2/4"]]).matrix[0, 0] == Fraction(1, 2), "reduced"

    def test_first_difference(self):
        """
        Test the witness of two different maps
        """
        f = LinMap.from_rows(Z2, [[1, 0, 0], [0, 1, 0]])
        g = LinMap.from_rows(Z2, [[1, 0, 0], [0, 1, 1]])
        assert f.first_difference(g) == 2, "the maps differ on the third basis vector"
        assert f.first_difference(f) is None, "a map does not differ from itself"

    def test_tensor_legs(self):
        """
        Test that the first factor is the leftmost leg
        """
        e1 = LinMap.from_rows(Z2, [[1], [0]])
        e2 = LinMap.from_rows(Z2, [[0], [1]])
        # e1⊗e2 is the basis vector of index 0·2 + 1
        assert tensor(e1, e2) == LinMap.from_rows(Z2, [[0], [1], [0], [0]]), "row-major legs"

    @settings(max_examples=40, deadline=None)
    @given(maps(Z3, 2, 3), maps(Z3, 3, 2), maps(Z3, 2, 2))
    def test_compose_associative(self, f, g, h):
        """
        Test (f∘g)∘h = f∘(g∘h)
        """
        assert compose(compose(f, g), h) == compose(f, compose(g, h)), "not associative"

    @settings(max_examples=40, deadline=None)
    @given(maps(Q, 2, 2), maps(Q, 2, 1), maps(Q, 1, 2), maps(Q, 2, 1))
    def test_interchange(self, f, g, h, k):
        """
        Test (f⊗h)∘(g⊗k) = (f∘g)⊗(h∘k)
        """
        assert compose(tensor(f, h), tensor(g, k)) == tensor(
            compose(f, g), compose(h, k)
        ), "the interchange law fails"


class TestSplitting:
    """
    Test rank factorizations of idempotents
    """

    @pytest.mark.parametrize("ring", [Z2, Z3])
    def test_split_every_idempotent(self, ring):
        """
        Test i∘p = e and p∘i = I on every 2x2 idempotent over a prime field
        """
        idempotents = [e for e in enumerate_maps(2, 2, ring) if compose(e, e) == e]
        assert idempotents, "there are idempotents"
        for e in idempotents:
            p, i = split_idempotent(e)
            assert compose(i, p) == e, f"i∘p != e for {e}"
            assert compose(p, i) == identity(ring, rank(e)), f"p∘i != I for {e}"

    def test_split_rational(self):
        """
        Test a rational idempotent with non-integer entries
        """
        e = LinMap.from_rows(Q, [["1/2", "1/2"], ["1/2", "1/2"]])
        p, i = split_idempotent(e)
        assert p.shape == (1, 2) and i.shape == (2, 1), "the image is a line"
        assert compose(i, p) == e, "i∘p != e"

    @settings(max_examples=100, deadline=None)
    @given(rational_idempotents())
    def test_split_random_rational(self, drawn):
        """
        Test the splitting of rational idempotents of every rank up to 3x3
        """
        e, r = drawn
        assert compose(e, e) == e, "the strategy draws idempotents"
        p, i = split_idempotent(e)
        assert p.shape == (r, e.cols) and i.shape == (e.rows, r), f"image of rank {r}"
        assert compose(i, p) == e, f"i∘p != e for {e}"
        assert compose(p, i) == identity(Q, r), f"p∘i != I for {e}"

    def test_refusals(self):
        """
        Test the errors of the splitting
        """
        with pytest.raises(NotIdempotent):
            split_idempotent(LinMap.from_rows(Q, [[2, 0], [0, 1]]))
        with pytest.raises(SplittingUnsupported):
            split_idempotent(identity(Z4, 2))

    def test_wrong_factorization(self, monkeypatch):
        """
        Test that a factorization failing i∘p = e or p∘i = I is raised, not returned
        """
        monkeypatch.setattr(
            "weak_monads.linalg.splitting.row_reduce",
            lambda f: (identity(f.ring, f.rows), tuple(range(f.rows))),
        )
        with pytest.raises(SplittingFailed):
            split_idempotent(LinMap.from_rows(Z2, [[1, 0], [0, 0]]))

    def test_column_space(self):
        """
        Test membership in a column space
        """
        span = LinMap.from_rows(Q, [[1], [1]])
        assert in_column_space(span, LinMap.from_rows(Q, [[3], [3]])), "multiple of the span"
        assert not in_column_space(span, LinMap.from_rows(Q, [[1], [0]])), "not in the span"


class TestEnumeration:
    """
    Test the exhaustive enumeration of maps
    """

    def test_order_and_count(self):
        """
        Test that the zero map comes first and every map appears once
        """
        every = list(enumerate_maps(2, 2, Z2))
        assert len(every) == count_maps(2, 2, Z2) == 16, "16 maps Z2² → Z2²"
        assert every[0].is_zero(), "the zero map comes first"
        assert len(set(every)) == 16, "maps must be distinct"
        assert next(islice(enumerate_maps(1, 1, Z3), 2, None)) == LinMap.from_rows(
            Z3, [[2]]
        ), "lexicographic order"

    def test_cap(self):
        """
        Test that the cap is enforced before anything is yielded
        """
        with pytest.raises(EnumerationCapExceeded):
            next(enumerate_maps(4, 4, Z2, cap=1000))
        with pytest.raises(EnumerationCapExceeded):
            enumerate_maps(4, 4, Z2, cap=1000)
        assert len(list(enumerate_maps(2, 2, Z2, cap=16))) == 16, "the cap is inclusive"
        with pytest.raises(InvalidRing):
            count_maps(1, 1, Q)
