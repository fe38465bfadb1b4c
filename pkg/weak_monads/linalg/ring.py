"""
Exact scalar rings: integers modulo n and the rationals

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
from fractions import Fraction
import re
from typing import Any, Optional, Union

# Third Party
import numpy as np
from sympy import isprime

# Constants
from .constants import InvalidRing, SMALL_MODULUS

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


Scalar = Union[int, Fraction]

_DESCRIPTOR = re.compile(r"^\s*(?:Z_?(\d+)|(Q|QQ))\s*$")

_to_fraction = np.frompyfunc(Fraction, 1, 1)
_to_int = np.frompyfunc(int, 1, 1)


##############
# EXACT RING #
##############


@dataclass(frozen=True)
class ExactRing:
    """
    The scalars every map is written over: Z_n for a modulus n ≥ 2,
    or the rationals when ``modulus`` is None
    """

    modulus: Optional[int] = None
    """Modulus of Z_n, None for the rationals"""

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise InvalidRing(f"modulus must be at least 2, got {self.modulus}")

    @classmethod
    def zn(cls, modulus: int) -> "ExactRing":
        """Integers modulo ``modulus``"""
        return cls(int(modulus))

    @classmethod
    def rationals(cls) -> "ExactRing":
        """The field of rational numbers"""
        return cls(None)

    @classmethod
    def parse(cls, descriptor: str) -> "ExactRing":
        """
        Read a ring descriptor such as ``Z2``, ``Z_5`` or ``Q``

        :param descriptor: textual ring name
        :return: the ring
        """
        match = _DESCRIPTOR.match(str(descriptor))
        if not match:
            raise InvalidRing(f"unknown ring descriptor {descriptor!r}")
        if match.group(1):
            return cls.zn(int(match.group(1)))
        return cls.rationals()

    def __str__(self) -> str:
        return "Q" if self.modulus is None else f"Z{self.modulus}"

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    @property
    def is_field(self) -> bool:
        """Rationals, or Z_p for a prime p"""
        return self.modulus is None or bool(isprime(self.modulus))

    @property
    def dtype(self) -> Any:
        if self.modulus is not None and self.modulus <= SMALL_MODULUS:
            return np.int64
        return object

    def element(self, value: Any) -> Scalar:
        """
        Interpret a value (integer, Fraction or "p/q" string) as a ring element
        """
        try:
            if self.modulus is None:
                return Fraction(value.strip() if isinstance(value, str) else value)
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    # a/b with b invertible mod n
                    inverse = pow(value.denominator, -1, self.modulus)
                    return (value.numerator * inverse) % self.modulus
                value = value.numerator
            return int(value) % self.modulus
        except (TypeError, ValueError, ZeroDivisionError) as error:
            raise InvalidRing(f"{value!r} is not an element of {self}") from error

    def reduce(self, array: Any) -> np.ndarray:
        """
        Bring an array into canonical form: entries mod n, or Fractions

        :param array: array-like of scalars
        :return: new array with the ring dtype
        """
        array = np.asarray(array)
        if self.modulus is None:
            if array.size == 0:
                return np.zeros(array.shape, dtype=object)
            return _to_fraction(array).astype(object)
        if self.dtype is object:
            if array.size == 0:
                return np.zeros(array.shape, dtype=object)
            return (_to_int(array) % self.modulus).astype(object)
        if array.dtype == object:
            array = _to_int(array) if array.size else array
        return np.mod(array.astype(np.int64), self.modulus)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return self.reduce(np.zeros((rows, cols), dtype=np.int64))

    def eye(self, size: int) -> np.ndarray:
        return self.reduce(np.eye(size, dtype=np.int64))

    def serialize(self, scalar: Scalar) -> Union[int, str]:
        """
        JSON form of a scalar: integers for Z_n, "p/q" strings for the rationals
        """
        if self.modulus is None:
            return str(Fraction(scalar))
        return int(scalar)
