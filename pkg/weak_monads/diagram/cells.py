"""
Functor words and formal 2-cells

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
from operator import mul
from typing import Tuple

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


#################
# FUNCTOR WORDS #
#################


@dataclass(frozen=True)
class FunctorSymbol:
    """A tensor-type endofunctor X⊗– given by the dimension of X"""

    name: str
    """Letter used in words and renderings"""

    carrier_dim: int
    """Dimension of X"""


FunctorWord = Tuple[FunctorSymbol, ...]
"""Composite X1∘…∘Xk, X1 outermost; the empty word is the identity functor"""


def carrier(word: FunctorWord) -> int:
    """Dimension of X1⊗…⊗Xk (1 for the empty word)"""
    return reduce(mul, (symbol.carrier_dim for symbol in word), 1)


def spell(word: FunctorWord) -> str:
    return " ".join(symbol.name for symbol in word)


# ------------------------------------------------------------------------------


#########
# CELLS #
#########


class CellExpr:
    """Formal 2-cell between functor words"""

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Gen(CellExpr):
    name: str

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class Id(CellExpr):
    word: FunctorWord

    def render(self) -> str:
        return f"id[{spell(self.word)}]"


@dataclass(frozen=True)
class Vert(CellExpr):
    """second · first"""

    second: CellExpr
    first: CellExpr

    def render(self) -> str:
        return f"{self.second.render()} . {self.first.render()}"


@dataclass(frozen=True)
class Whisker(CellExpr):
    """left inner right, i.e. id_left ⊗ inner ⊗ id_right"""

    left: FunctorWord
    inner: CellExpr
    right: FunctorWord

    def render(self) -> str:
        inner = self.inner.render()
        if isinstance(self.inner, Vert):
            inner = f"({inner})"
        parts = [spell(self.left), inner, spell(self.right)]
        return "(" + " ".join(part for part in parts if part) + ")"


def vert(*cells: CellExpr) -> CellExpr:
    """
    Vertical composite written in the usual order: vert(a, b, c) is a·b·c,
    so c is applied first
    """
    return reduce(lambda second, first: Vert(second, first), cells)
