"""
Instance files: parsing, validation, serialization and conversion to structures

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
import json
import os
from dataclasses import dataclass
from math import prod
from types import MappingProxyType
from typing import Any, Dict, Mapping, Union

# Validation
from jsonschema import Draft7Validator, ValidationError

# Exact linear algebra
from ..linalg import ExactRing, LinalgException, LinMap

# Structures
from ..comonadics import CoalgebraComodule, QCounitalCoalgebra
from ..entwine import ComoduleEntwining, ModuleEntwining
from ..mixed import MixedDistributiveLaw
from ..monadics import AlgebraModule, QUnitalAlgebra
from ..pairing import DualPairing

# Command line
from .constants import INSTANCE_SCHEMA, LAYOUTS, MalformedInstance, UnknownKind

# Utilities
from ..utilities import WeakLogger

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("Instance")

_VALIDATOR = Draft7Validator(INSTANCE_SCHEMA)


############
# INSTANCE #
############


@dataclass(frozen=True)
class Instance:
    """
    One structure read from (or written to) a JSON instance file
    """

    kind: str
    ring: ExactRing
    dims: Mapping[str, int]
    matrices: Mapping[str, LinMap]
    name: str = ""

    def __getitem__(self, matrix: str) -> LinMap:
        return self.matrices[matrix]


@dataclass(frozen=True)
class ProductInput:
    """Two weak monads and λ: FT → TF"""

    F: QUnitalAlgebra
    T: QUnitalAlgebra
    lam: LinMap


@dataclass(frozen=True)
class CoproductInput:
    """Two weak comonads and ψ: TG → GT"""

    G: QCounitalCoalgebra
    T: QCounitalCoalgebra
    psi: LinMap


Structure = Union[
    QUnitalAlgebra,
    QCounitalCoalgebra,
    AlgebraModule,
    CoalgebraComodule,
    DualPairing,
    ModuleEntwining,
    ComoduleEntwining,
    ProductInput,
    CoproductInput,
    MixedDistributiveLaw,
]


# ------------------------------------------------------------------------------


###########
# PARSING #
###########


def _extent(expression: str, dims: Mapping[str, int]) -> int:
    """Value of a shape expression such as ``a*m`` or ``1``"""
    return prod(1 if factor == "1" else dims[factor] for factor in expression.split("*"))


def parse(document: Any, name: str = "") -> Instance:
    """
    Validate a decoded instance document and build its matrices

    :param document: decoded JSON object
    :param name: instance id used when the document has no name
    :return: the instance
    :raise MalformedInstance: on a schema violation or an inconsistent shape
    :raise UnknownKind: when the kind is not supported
    """
    errors = sorted(_VALIDATOR.iter_errors(document), key=lambda error: list(error.path))
    if errors:
        first: ValidationError = errors[0]
        location = "/".join(str(step) for step in first.path) or "<root>"
        raise MalformedInstance(f"{location}: {first.message}")

    kind = document["kind"]
    if kind not in LAYOUTS:
        raise UnknownKind(f"unknown kind {kind!r}")
    layout = LAYOUTS[kind]

    dims = dict(document["dims"])
    if set(dims) != set(layout["dims"]):
        raise MalformedInstance(
            f"{kind} needs the dims {sorted(layout['dims'])}, got {sorted(dims)}"
        )
    missing = set(layout["matrices"]) - set(document["matrices"])
    extra = set(document["matrices"]) - set(layout["matrices"])
    if missing or extra:
        raise MalformedInstance(
            f"{kind} needs the matrices {sorted(layout['matrices'])}"
            f" (missing {sorted(missing)}, unexpected {sorted(extra)})"
        )

    try:
        ring = ExactRing.parse(document["ring"])
        matrices = {
            key: LinMap.from_rows(
                ring,
                document["matrices"][key],
                (_extent(rows, dims), _extent(cols, dims)),
            )
            for key, (rows, cols) in layout["matrices"].items()
        }
    except LinalgException as error:
        raise MalformedInstance(str(error)) from error

    return Instance(
        kind=kind,
        ring=ring,
        dims=MappingProxyType(dims),
        matrices=MappingProxyType(matrices),
        name=document.get("name", name),
    )


def load(path: str) -> Instance:
    """
    Read an instance file

    :param path: JSON file
    :raise MalformedInstance: when the file cannot be read or decoded
    """
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except (OSError, json.JSONDecodeError) as error:
        raise MalformedInstance(f"{path}: {error}") from error
    name = os.path.splitext(os.path.basename(path))[0]
    instance = parse(document, name)
    logger.debug(f"loaded {instance.kind} {instance.name} over {instance.ring}")
    return instance


# ------------------------------------------------------------------------------


#################
# SERIALIZATION #
#################


def dump(instance: Instance) -> Dict[str, Any]:
    """JSON document of an instance, rationals as "p/q" strings"""
    document = {
        "kind": instance.kind,
        "ring": str(instance.ring),
        "dims": dict(instance.dims),
        "matrices": {
            key: [[instance.ring.serialize(value) for value in row] for row in matrix.to_rows()]
            for key, matrix in instance.matrices.items()
        },
    }
    if instance.name:
        document = {"name": instance.name, **document}
    return document


def write(instance: Instance, path: str) -> str:
    """
    Write an instance file, creating the parent directory when needed

    :return: the written path
    """
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(dump(instance), handle, indent=2, ensure_ascii=False)
        handle.write("\n")
    logger.info(f"written {instance.kind} {instance.name or '<unnamed>'} to {path}")
    return path


# ------------------------------------------------------------------------------


##############
# STRUCTURES #
##############


def _algebra(instance: Instance, prefix: str = "", dim: str = "a") -> QUnitalAlgebra:
    return QUnitalAlgebra(
        instance.ring, instance.dims[dim], instance[f"{prefix}m"], instance[f"{prefix}u"]
    )


def _coalgebra(instance: Instance, prefix: str = "", dim: str = "c") -> QCounitalCoalgebra:
    return QCounitalCoalgebra(
        instance.ring, instance.dims[dim], instance[f"{prefix}delta"], instance[f"{prefix}eps"]
    )


def to_structure(instance: Instance) -> Structure:
    """
    Build the structure an instance describes

    :raise InvalidStructure: when a product is not associative or a
        coproduct not coassociative
    :raise InvalidEntwining: when an entwining has inconsistent shapes
    :raise InvalidMixedLaw: when F or G of a mixed law is not weak
    """
    kind = instance.kind
    if kind == "algebra":
        return _algebra(instance)
    if kind == "coalgebra":
        return _coalgebra(instance)
    if kind == "module":
        return AlgebraModule(_algebra(instance), instance.dims["m"], instance["rho"])
    if kind == "comodule":
        return CoalgebraComodule(_coalgebra(instance), instance.dims["m"], instance["upsilon"])
    if kind == "pairing":
        return DualPairing(
            instance.ring, instance.dims["a"], instance.dims["b"], instance["eta"], instance["eps"]
        )
    if kind == "entwining-module":
        return ModuleEntwining(
            _algebra(instance, "L_", "l"),
            _algebra(instance, "F_", "f"),
            instance.dims["t"],
            instance["lam"],
        )
    if kind == "entwining-comodule":
        return ComoduleEntwining(
            _coalgebra(instance, "G_", "g"),
            _coalgebra(instance, "H_", "h"),
            instance.dims["t"],
            instance["psi"],
        )
    if kind == "entwining-product":
        return ProductInput(
            _algebra(instance, "F_", "f"), _algebra(instance, "T_", "t"), instance["lam"]
        )
    if kind == "entwining-coproduct":
        return CoproductInput(
            _coalgebra(instance, "G_", "g"), _coalgebra(instance, "T_", "t"), instance["psi"]
        )
    if kind == "mixed":
        return MixedDistributiveLaw(
            _algebra(instance, "F_", "f"), _coalgebra(instance, "G_", "g"), instance["omega"]
        )
    raise UnknownKind(f"unknown kind {kind!r}")


def from_structure(structure: Structure, name: str = "") -> Instance:
    """
    Instance describing a structure, the inverse of to_structure

    :raise UnknownKind: for an object with no instance kind
    """
    if isinstance(structure, QUnitalAlgebra):
        kind, dims = "algebra", {"a": structure.dim}
        matrices = {"m": structure.m, "u": structure.u}
    elif isinstance(structure, QCounitalCoalgebra):
        kind, dims = "coalgebra", {"c": structure.dim}
        matrices = {"delta": structure.delta, "eps": structure.eps}
    elif isinstance(structure, AlgebraModule):
        kind = "module"
        dims = {"a": structure.algebra.dim, "m": structure.dim}
        matrices = {"m": structure.algebra.m, "u": structure.algebra.u, "rho": structure.rho}
    elif isinstance(structure, CoalgebraComodule):
        kind = "comodule"
        dims = {"c": structure.coalgebra.dim, "m": structure.dim}
        matrices = {
            "delta": structure.coalgebra.delta,
            "eps": structure.coalgebra.eps,
            "upsilon": structure.upsilon,
        }
    elif isinstance(structure, DualPairing):
        kind, dims = "pairing", {"a": structure.a, "b": structure.b}
        matrices = {"eta": structure.eta, "eps": structure.eps}
    elif isinstance(structure, ModuleEntwining):
        kind = "entwining-module"
        dims = {"l": structure.L.dim, "f": structure.F.dim, "t": structure.t}
        matrices = {
            "L_m": structure.L.m,
            "L_u": structure.L.u,
            "F_m": structure.F.m,
            "F_u": structure.F.u,
            "lam": structure.lam,
        }
    elif isinstance(structure, ComoduleEntwining):
        kind = "entwining-comodule"
        dims = {"g": structure.G.dim, "h": structure.H.dim, "t": structure.t}
        matrices = {
            "G_delta": structure.G.delta,
            "G_eps": structure.G.eps,
            "H_delta": structure.H.delta,
            "H_eps": structure.H.eps,
            "psi": structure.psi,
        }
    elif isinstance(structure, ProductInput):
        kind = "entwining-product"
        dims = {"f": structure.F.dim, "t": structure.T.dim}
        matrices = {
            "F_m": structure.F.m,
            "F_u": structure.F.u,
            "T_m": structure.T.m,
            "T_u": structure.T.u,
            "lam": structure.lam,
        }
    elif isinstance(structure, CoproductInput):
        kind = "entwining-coproduct"
        dims = {"g": structure.G.dim, "t": structure.T.dim}
        matrices = {
            "G_delta": structure.G.delta,
            "G_eps": structure.G.eps,
            "T_delta": structure.T.delta,
            "T_eps": structure.T.eps,
            "psi": structure.psi,
        }
    elif isinstance(structure, MixedDistributiveLaw):
        kind = "mixed"
        dims = {"f": structure.F.dim, "g": structure.G.dim}
        matrices = {
            "F_m": structure.F.m,
            "F_u": structure.F.u,
            "G_delta": structure.G.delta,
            "G_eps": structure.G.eps,
            "omega": structure.omega,
        }
    else:
        raise UnknownKind(f"no instance kind for {type(structure).__name__}")

    ring = next(iter(matrices.values())).ring
    return Instance(kind, ring, MappingProxyType(dims), MappingProxyType(matrices), name)
