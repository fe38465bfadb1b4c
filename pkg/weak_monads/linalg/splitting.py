"""
Rank factorization and idempotent splitting over fields

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
from typing import Any, Tuple

# Third Party
from sympy.polys.domains import FF, QQ
from sympy.polys.matrices import DomainMatrix

# Exact linear algebra
from .constants import (
    DimensionMismatch,
    NotIdempotent,
    SplittingFailed,
    SplittingUnsupported,
)
from .linmap import LinMap, compose, hstack, identity, zero_map
from .ring import ExactRing

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


#################
# DOMAIN MATRIX #
#################


def _domain(ring: ExactRing) -> Any:
    """
    sympy ground domain matching the ring

    :raise SplittingUnsupported: for Z_n with composite n
    """
    if ring.is_rational:
        return QQ
    if not ring.is_field:
        raise SplittingUnsupported(
            f"splitting unsupported over this ring: {ring} is not a field"
        )
    return FF(ring.modulus, symmetric=False)


def _to_domain_matrix(f: LinMap) -> DomainMatrix:
    domain = _domain(f.ring)
    if f.ring.is_rational:
        rows = [[QQ(value.numerator, value.denominator) for value in row] for row in f.to_rows()]
    else:
        rows = [[domain(int(value)) for value in row] for row in f.to_rows()]
    return DomainMatrix.from_list(rows, domain)


def _from_domain_matrix(ring: ExactRing, matrix: DomainMatrix) -> LinMap:
    domain = matrix.domain
    rows = []
    for row in matrix.to_list():
        converted = []
        for value in row:
            value = domain.to_sympy(value)
            if ring.is_rational:
                converted.append(Fraction(int(value.p), int(value.q)))
            else:
                converted.append(int(value))
        rows.append(converted)
    return LinMap.from_rows(ring, rows, shape=matrix.shape)


def row_reduce(f: LinMap) -> Tuple[LinMap, Tuple[int, ...]]:
    """
    Reduced row echelon form over a field

    :param f: map to reduce
    :return: the reduced matrix and its pivot columns
    """
    _domain(f.ring)
    if f.rows == 0 or f.cols == 0:
        return f, ()
    reduced, pivots = _to_domain_matrix(f).rref()
    return _from_domain_matrix(f.ring, reduced), tuple(int(p) for p in pivots)


def rank(f: LinMap) -> int:
    """Rank of a map over a field"""
    return len(row_reduce(f)[1])


def in_column_space(span: LinMap, vectors: LinMap) -> bool:
    """
    Check that every column of ``vectors`` is a combination of the columns of ``span``
    """
    if span.rows != vectors.rows:
        raise DimensionMismatch("span and vectors live in different spaces")
    if vectors.cols == 0:
        return True
    if span.cols == 0:
        return vectors.is_zero()
    return rank(hstack(span, vectors)) == rank(span)


# ------------------------------------------------------------------------------


########################
# IDEMPOTENT SPLITTING #
########################


def split_idempotent(e: LinMap) -> Tuple[LinMap, LinMap]:
    """
    Split an idempotent e = i∘p with p∘i the identity of the image.

    The rank factorization takes i as the pivot columns of e and p as
    the non-zero rows of its reduced row echelon form.

    :param e: square map with e∘e = e
    :return: (p, i)
    :raise NotIdempotent: when e∘e != e
    :raise SplittingFailed: when the factorization misses i∘p = e or p∘i = I
    :raise SplittingUnsupported: over Z_n with composite n
    """
    if e.rows != e.cols:
        raise DimensionMismatch(f"an idempotent must be square, got {e.shape}")
    if compose(e, e) != e:
        raise NotIdempotent("the map does not satisfy e∘e = e")

    reduced, pivots = row_reduce(e)
    size = len(pivots)
    if size == 0:
        return zero_map(e.ring, 0, e.cols), zero_map(e.ring, e.rows, 0)

    p = LinMap(e.ring, reduced.matrix[:size, :])
    i = LinMap(e.ring, e.matrix[:, list(pivots)])

    # i has full column rank and p full row rank, so p∘i is the identity
    if compose(i, p) != e or compose(p, i) != identity(e.ring, size):
        raise SplittingFailed(f"the rank factorization does not split {e}")
    return p, i
