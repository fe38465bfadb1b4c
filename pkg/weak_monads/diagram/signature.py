"""
Signatures: generators with bodies, and exact evaluation of 2-cells

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
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

# Exact linear algebra
from ..linalg import ExactRing, LinMap, compose, identity, tensor

# Diagram
from .cells import CellExpr, FunctorSymbol, FunctorWord, Gen, Id, Vert, Whisker, carrier, spell
from .constants import (
    IllTypedComposite,
    InvalidSignature,
    NotParallelPair,
    UnknownGenerator,
    UnknownSymbol,
)

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


##############
# GENERATORS #
##############


@dataclass(frozen=True)
class Generator:
    name: str
    """Name used by Gen cells"""

    source: FunctorWord
    """Domain word"""

    target: FunctorWord
    """Codomain word"""

    body: LinMap
    """Component at the unit object: carrier(target) × carrier(source)"""


@dataclass(frozen=True)
class LawResult:
    """Outcome of an equation between two parallel cells"""

    holds: bool
    """True when both sides evaluate to the same map"""

    witness: Optional[int]
    """On failure, first basis input on which the sides differ"""

    lhs: str
    """Rendering of the left side"""

    rhs: str
    """Rendering of the right side"""

    def __bool__(self) -> bool:
        return self.holds


# ------------------------------------------------------------------------------


#############
# SIGNATURE #
#############


class Signature:
    """
    Functor letters and generator 2-cells over one ring.
    Immutable once built; ``extend`` returns a new signature.
    """

    def __init__(
        self,
        ring: ExactRing,
        symbols: Iterable[FunctorSymbol],
        generators: Iterable[Generator],
    ) -> None:
        self.ring = ring

        table: Dict[str, FunctorSymbol] = {}
        for symbol in symbols:
            if symbol.name in table and table[symbol.name] != symbol:
                raise InvalidSignature(f"letter {symbol.name} declared twice")
            table[symbol.name] = symbol
        self.symbols: Mapping[str, FunctorSymbol] = MappingProxyType(table)

        cells: Dict[str, Generator] = {}
        for generator in generators:
            if generator.name in cells:
                raise InvalidSignature(f"generator {generator.name} declared twice")
            expected = (carrier(generator.target), carrier(generator.source))
            if generator.body.shape != expected:
                raise InvalidSignature(
                    f"generator {generator.name}: body {generator.body.shape} "
                    f"does not match carriers {expected}"
                )
            if generator.body.ring != ring:
                raise InvalidSignature(f"generator {generator.name} over another ring")
            cells[generator.name] = generator
        self.generators: Mapping[str, Generator] = MappingProxyType(cells)

    @classmethod
    def build(
        cls,
        ring: ExactRing,
        symbols: Mapping[str, int],
        generators: Sequence[Tuple[str, str, str, LinMap]] = (),
    ) -> "Signature":
        """
        Build a signature from letter dimensions and generator tuples

        :param ring: ring of every body
        :param symbols: letter name -> carrier dimension
        :param generators: (name, source word, target word, body), words
            written as space separated letters, "" for the identity functor
        """
        letters = [FunctorSymbol(name, dim) for name, dim in symbols.items()]
        draft = cls(ring, letters, ())
        return cls(
            ring,
            letters,
            [
                Generator(name, draft.word(source), draft.word(target), body)
                for name, source, target, body in generators
            ],
        )

    def extend(
        self,
        symbols: Mapping[str, int] = None,
        generators: Sequence[Tuple[str, str, str, LinMap]] = (),
    ) -> "Signature":
        """New signature with extra letters and generators"""
        letters = list(self.symbols.values()) + [
            FunctorSymbol(name, dim) for name, dim in (symbols or {}).items()
        ]
        draft = Signature(self.ring, letters, ())
        return Signature(
            self.ring,
            letters,
            list(self.generators.values())
            + [
                Generator(name, draft.word(source), draft.word(target), body)
                for name, source, target, body in generators
            ],
        )

    # --------------------------------------------------------------------------
    # Cell helpers

    def word(self, letters: Union[str, FunctorWord] = "") -> FunctorWord:
        """
        Resolve a space separated word such as "F F G"
        """
        if isinstance(letters, tuple):
            return letters
        try:
            return tuple(self.symbols[name] for name in letters.split())
        except KeyError as error:
            raise UnknownSymbol(f"unknown letter {error.args[0]}") from None

    def gen(self, name: str) -> Gen:
        if name not in self.generators:
            raise UnknownGenerator(f"unknown generator {name}")
        return Gen(name)

    def ident(self, letters: Union[str, FunctorWord] = "") -> Id:
        return Id(self.word(letters))

    def at(
        self,
        left: Union[str, FunctorWord],
        cell: Union[str, CellExpr],
        right: Union[str, FunctorWord] = "",
    ) -> CellExpr:
        """
        Whisker a cell (or a generator name) by words on both sides,
        e.g. ``at("T T", "mu")`` is TTμ
        """
        inner = self.gen(cell) if isinstance(cell, str) else cell
        left, right = self.word(left), self.word(right)
        if not left and not right:
            return inner
        return Whisker(left, inner, right)

    def horizontal(self, outer: CellExpr, inner: CellExpr) -> CellExpr:
        """
        Horizontal composite outer∗inner: X Y → X' Y', as (outer Y')·(X inner)
        """
        outer_source, _ = self.boundary(outer)
        _, inner_target = self.boundary(inner)
        return Vert(
            self.at((), outer, inner_target),
            self.at(outer_source, inner, ()),
        )

    # --------------------------------------------------------------------------
    # Evaluation

    def boundary(self, cell: CellExpr) -> Tuple[FunctorWord, FunctorWord]:
        """Source and target words of a cell"""
        if isinstance(cell, Gen):
            if cell.name not in self.generators:
                raise UnknownGenerator(f"unknown generator {cell.name}")
            generator = self.generators[cell.name]
            return generator.source, generator.target
        if isinstance(cell, Id):
            return cell.word, cell.word
        if isinstance(cell, Vert):
            first_source, first_target = self.boundary(cell.first)
            second_source, second_target = self.boundary(cell.second)
            if first_target != second_source:
                raise IllTypedComposite(
                    f"cannot compose {cell.second.render()} after {cell.first.render()}: "
                    f"[{spell(first_target)}] != [{spell(second_source)}]"
                )
            return first_source, second_target
        if isinstance(cell, Whisker):
            source, target = self.boundary(cell.inner)
            return cell.left + source + cell.right, cell.left + target + cell.right
        raise IllTypedComposite(f"not a cell: {cell!r}")

    def evaluate(self, cell: CellExpr) -> LinMap:
        """Component of a cell at the unit object"""
        if isinstance(cell, Gen):
            self.boundary(cell)
            return self.generators[cell.name].body
        if isinstance(cell, Id):
            return identity(self.ring, carrier(cell.word))
        if isinstance(cell, Vert):
            self.boundary(cell)
            return compose(self.evaluate(cell.second), self.evaluate(cell.first))
        if isinstance(cell, Whisker):
            body = self.evaluate(cell.inner)
            legs = []
            if cell.left:
                legs.append(identity(self.ring, carrier(cell.left)))
            legs.append(body)
            if cell.right:
                legs.append(identity(self.ring, carrier(cell.right)))
            return tensor(*legs)
        raise IllTypedComposite(f"not a cell: {cell!r}")

    def check_equation(self, lhs: CellExpr, rhs: CellExpr) -> LawResult:
        """
        Decide lhs = rhs by evaluation

        :raise NotParallelPair: when the boundaries differ
        """
        if self.boundary(lhs) != self.boundary(rhs):
            raise NotParallelPair(
                f"not a parallel pair: {lhs.render()} and {rhs.render()}"
            )
        witness = self.evaluate(lhs).first_difference(self.evaluate(rhs))
        return LawResult(witness is None, witness, lhs.render(), rhs.render())


# ------------------------------------------------------------------------------


def boundary(cell: CellExpr, sig: Signature) -> Tuple[FunctorWord, FunctorWord]:
    return sig.boundary(cell)


def evaluate(cell: CellExpr, sig: Signature) -> LinMap:
    return sig.evaluate(cell)


def check_equation(lhs: CellExpr, rhs: CellExpr, sig: Signature) -> LawResult:
    return sig.check_equation(lhs, rhs)
