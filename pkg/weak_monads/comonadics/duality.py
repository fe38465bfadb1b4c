"""
Transpose duality between algebras and coalgebras

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
from typing import Union

# Monadics
from ..monadics import AlgebraModule, QUnitalAlgebra

# Comonadics
from .coalgebra import CoalgebraComodule, QCounitalCoalgebra
from .constants import InvalidStructure

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


Dualizable = Union[QUnitalAlgebra, QCounitalCoalgebra, AlgebraModule, CoalgebraComodule]


def transpose_dual(structure: Dualizable) -> Dualizable:
    """
    Transpose every structure map: (A, m, u) ↦ (A, mᵀ, uᵀ) and back,
    modules to comodules over the dual and back. Transposition reverses
    vertical composition and keeps whiskering, so every monad flag
    becomes the matching comonad flag.

    :param structure: algebra, coalgebra, module or comodule
    :return: the transposed structure
    """
    if isinstance(structure, QUnitalAlgebra):
        return QCounitalCoalgebra(
            structure.ring, structure.dim, structure.m.transpose(), structure.u.transpose()
        )
    if isinstance(structure, QCounitalCoalgebra):
        return QUnitalAlgebra(
            structure.ring, structure.dim, structure.delta.transpose(), structure.eps.transpose()
        )
    if isinstance(structure, AlgebraModule):
        return CoalgebraComodule(
            transpose_dual(structure.algebra), structure.dim, structure.rho.transpose()
        )
    if isinstance(structure, CoalgebraComodule):
        return AlgebraModule(
            transpose_dual(structure.coalgebra), structure.dim, structure.upsilon.transpose()
        )
    raise InvalidStructure(f"nothing to dualize in {type(structure).__name__}")
