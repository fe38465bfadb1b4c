"""
Compatible modules and comodules as objects of a mixed signature

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
from typing import List, Tuple

# Diagram
from ..diagram import CellExpr, Signature, vert

# Monadics and comonadics
from ..comonadics import CoalgebraComodule, enumerate_compatible_comodules
from ..monadics import AlgebraModule, enumerate_compatible_modules

# Mixed
from .distributive import MixedDistributiveLaw

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class ModuleObject:
    """An F-module inside a signature: its word and its action F obj → obj"""

    obj: str
    action: CellExpr


@dataclass(frozen=True)
class ComoduleObject:
    """A G-comodule inside a signature: its word and its coaction obj → G obj"""

    obj: str
    coaction: CellExpr


def module_signature(W: MixedDistributiveLaw, M: AlgebraModule) -> Signature:
    """Mixed signature plus the letter A and the action phi"""
    return W.signature().extend({"A": M.dim}, [("phi", "F A", "A", M.rho)])


def comodule_signature(W: MixedDistributiveLaw, M: CoalgebraComodule) -> Signature:
    """Mixed signature plus the letter B and the coaction ups"""
    return W.signature().extend({"B": M.dim}, [("ups", "B", "G B", M.upsilon)])


def lift_to_g(sig: Signature, module: ModuleObject) -> ModuleObject:
    """Ḡ(obj, φ) = (G obj, Gφ·ω_obj)"""
    return ModuleObject(
        f"G {module.obj}",
        vert(sig.at("G", module.action), sig.at("", "omega", module.obj)),
    )


def lift_to_f(sig: Signature, comodule: ComoduleObject) -> ComoduleObject:
    """F̂(obj, υ) = (F obj, ω_obj·Fυ)"""
    return ComoduleObject(
        f"F {comodule.obj}",
        vert(sig.at("", "omega", comodule.obj), sig.at("F", comodule.coaction)),
    )


def module_morphism(
    sig: Signature, f: CellExpr, source: ModuleObject, target: ModuleObject
) -> Tuple[CellExpr, CellExpr]:
    """The two sides of f·action = action'·Ff, returned as a pair of cells"""
    return vert(f, source.action), vert(target.action, sig.at("F", f))


def comodule_morphism(
    sig: Signature, f: CellExpr, source: ComoduleObject, target: ComoduleObject
) -> Tuple[CellExpr, CellExpr]:
    """The two sides of coaction'·f = Gf·coaction"""
    return vert(target.coaction, f), vert(sig.at("G", f), source.coaction)


def module_family(W: MixedDistributiveLaw, dims: int, cap: int = None) -> List[AlgebraModule]:
    return enumerate_compatible_modules(W.F, dims, cap)


def comodule_family(
    W: MixedDistributiveLaw, dims: int, cap: int = None
) -> List[CoalgebraComodule]:
    return enumerate_compatible_comodules(W.G, dims, cap)
