"""
Immutable exact matrices and their composition

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
from functools import reduce
from typing import Any, List, Optional, Sequence, Tuple

# Third Party
import numpy as np

# Exact linear algebra
from .constants import DimensionMismatch, RingMismatch
from .ring import ExactRing, Scalar

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


###########
# LIN MAP #
###########


@dataclass(frozen=True, eq=False)
class LinMap:
    """
    A linear map R^cols → R^rows written as a rows×cols matrix:
    column j is the image of the j-th basis vector
    """

    ring: ExactRing
    """Ring of the entries"""

    matrix: np.ndarray
    """Read-only matrix of reduced entries"""

    def __post_init__(self):
        matrix = self.ring.reduce(self.matrix)
        if matrix.ndim != 2:
            raise DimensionMismatch(f"a map needs a 2-D matrix, got shape {matrix.shape}")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_rows(
        cls, ring: ExactRing, rows: Sequence[Sequence[Any]], shape: Tuple[int, int] = None
    ) -> "LinMap":
        """
        Build a map from its rows

        :param ring: ring of the entries
        :param rows: row-major entries, integers, Fractions or "p/q" strings
        :param shape: explicit (rows, cols), required when a dimension is zero
        """
        entries = [[ring.element(value) for value in row] for row in rows]
        if shape is None:
            if not entries:
                raise DimensionMismatch("an empty map needs an explicit shape")
            shape = (len(entries), len(entries[0]))
        if any(len(row) != shape[1] for row in entries) or len(entries) != shape[0]:
            raise DimensionMismatch(f"rows do not match the shape {shape}")
        array = np.empty(shape, dtype=object)
        for i, row in enumerate(entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return cls(ring, array)

    @classmethod
    def from_columns(cls, ring: ExactRing, columns: Sequence["LinMap"], rows: int) -> "LinMap":
        """Juxtapose column vectors (rows×1 maps) into a single map"""
        if not columns:
            return zero_map(ring, rows, 0)
        return hstack(*columns)

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and bool(np.array_equal(self.matrix, other.matrix))
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.shape, self.entries()))

    def __repr__(self) -> str:
        return f"LinMap({self.ring}, {self.to_rows()})"

    def entries(self) -> Tuple[Scalar, ...]:
        """Entries in row-major order"""
        return tuple(self.matrix.ravel().tolist())

    def to_rows(self) -> List[List[Scalar]]:
        """Nested list of Python scalars"""
        return [[value for value in row] for row in self.matrix.tolist()]

    def column(self, index: int) -> "LinMap":
        """Image of the basis vector ``index``, as a rows×1 map"""
        return LinMap(self.ring, self.matrix[:, index : index + 1])

    def transpose(self) -> "LinMap":
        return LinMap(self.ring, self.matrix.T)

    def is_zero(self) -> bool:
        return not np.any(self.matrix != 0)

    def first_difference(self, other: "LinMap") -> Optional[int]:
        """
        Index of the first basis input on which two parallel maps differ

        :param other: map of the same shape
        :return: column index, None when the maps are equal
        """
        _check_ring(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot compare {self.shape} with {other.shape}")
        differing = np.nonzero(np.any(self.matrix != other.matrix, axis=0))[0]
        return int(differing[0]) if differing.size else None

    def __add__(self, other: "LinMap") -> "LinMap":
        _check_ring(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return LinMap(self.ring, self.matrix + other.matrix)

    def __sub__(self, other: "LinMap") -> "LinMap":
        _check_ring(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return LinMap(self.ring, self.matrix - other.matrix)

    def scale(self, scalar: Any) -> "LinMap":
        return LinMap(self.ring, self.matrix * self.ring.element(scalar))


# ------------------------------------------------------------------------------


##############
# OPERATIONS #
##############


def _check_ring(*maps: LinMap) -> None:
    rings = {f.ring for f in maps}
    if len(rings) > 1:
        raise RingMismatch(f"maps over different rings: {sorted(map(str, rings))}")


def identity(ring: ExactRing, size: int) -> LinMap:
    """Identity of R^size"""
    return LinMap(ring, ring.eye(size))


def zero_map(ring: ExactRing, rows: int, cols: int) -> LinMap:
    """The zero map R^cols → R^rows"""
    return LinMap(ring, ring.zeros(rows, cols))


def basis_vector(ring: ExactRing, size: int, index: int) -> LinMap:
    """The basis vector e_index of R^size as a size×1 map"""
    column = ring.zeros(size, 1)
    column[index, 0] = 1
    return LinMap(ring, column)


def compose(g: LinMap, f: LinMap, *rest: LinMap) -> LinMap:
    """
    Composite g∘f (∘ further maps, applied right to left)

    :raise DimensionMismatch: when g.cols != f.rows
    :raise RingMismatch: when the maps are over different rings
    """
    maps = (g, f) + rest
    _check_ring(*maps)

    def _pair(outer: LinMap, inner: LinMap) -> LinMap:
        if outer.cols != inner.rows:
            raise DimensionMismatch(
                f"cannot compose {outer.shape} after {inner.shape}"
            )
        return LinMap(outer.ring, outer.matrix.dot(inner.matrix))

    return reduce(_pair, maps)


def tensor(f: LinMap, *rest: LinMap) -> LinMap:
    """
    Kronecker product f⊗g⊗…, the first factor being the leftmost leg

    :raise RingMismatch: when the maps are over different rings
    """
    maps = (f,) + rest
    _check_ring(*maps)
    return reduce(lambda left, right: LinMap(left.ring, np.kron(left.matrix, right.matrix)), maps)


def hstack(first: LinMap, *rest: LinMap) -> LinMap:
    """Place maps with the same codomain side by side"""
    maps = (first,) + rest
    _check_ring(*maps)
    if len({f.rows for f in maps}) > 1:
        raise DimensionMismatch("hstack needs maps with the same number of rows")
    return LinMap(first.ring, np.hstack([f.matrix for f in maps]))
