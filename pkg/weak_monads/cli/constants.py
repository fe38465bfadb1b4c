"""
Constants of the command line package

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

# settings
from ..settings import config

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


##############
# EXIT CODES #
##############


EXIT_OK = 0
"""Every law of the requested suite holds"""

EXIT_VIOLATION = 1
"""Some law fails, or an oracle disagrees with the flags"""

EXIT_MALFORMED = 2
"""Unreadable input, unknown kind, or a refused request"""

# ------------------------------------------------------------------------------


##########
# REPORT #
##########


REPORT_INDENT = config.getint("REPORT", "INDENT", fallback=2)
"""Indentation of the JSON reports"""

# ------------------------------------------------------------------------------


#############
# INSTANCES #
#############


LAYOUTS = {
    "algebra": {
        "dims": ("a",),
        "matrices": {"m": ("a", "a*a"), "u": ("a", "1")},
    },
    "coalgebra": {
        "dims": ("c",),
        "matrices": {"delta": ("c*c", "c"), "eps": ("1", "c")},
    },
    "module": {
        "dims": ("a", "m"),
        "matrices": {"m": ("a", "a*a"), "u": ("a", "1"), "rho": ("m", "a*m")},
    },
    "comodule": {
        "dims": ("c", "m"),
        "matrices": {"delta": ("c*c", "c"), "eps": ("1", "c"), "upsilon": ("c*m", "m")},
    },
    "pairing": {
        "dims": ("a", "b"),
        "matrices": {"eta": ("b*a", "1"), "eps": ("1", "a*b")},
    },
    "entwining-module": {
        "dims": ("l", "f", "t"),
        "matrices": {
            "L_m": ("l", "l*l"),
            "L_u": ("l", "1"),
            "F_m": ("f", "f*f"),
            "F_u": ("f", "1"),
            "lam": ("t*f", "l*t"),
        },
    },
    "entwining-comodule": {
        "dims": ("g", "h", "t"),
        "matrices": {
            "G_delta": ("g*g", "g"),
            "G_eps": ("1", "g"),
            "H_delta": ("h*h", "h"),
            "H_eps": ("1", "h"),
            "psi": ("h*t", "t*g"),
        },
    },
    "entwining-product": {
        "dims": ("f", "t"),
        "matrices": {
            "F_m": ("f", "f*f"),
            "F_u": ("f", "1"),
            "T_m": ("t", "t*t"),
            "T_u": ("t", "1"),
            "lam": ("t*f", "f*t"),
        },
    },
    "entwining-coproduct": {
        "dims": ("g", "t"),
        "matrices": {
            "G_delta": ("g*g", "g"),
            "G_eps": ("1", "g"),
            "T_delta": ("t*t", "t"),
            "T_eps": ("1", "t"),
            "psi": ("g*t", "t*g"),
        },
    },
    "mixed": {
        "dims": ("f", "g"),
        "matrices": {
            "F_m": ("f", "f*f"),
            "F_u": ("f", "1"),
            "G_delta": ("g*g", "g"),
            "G_eps": ("1", "g"),
            "omega": ("g*f", "f*g"),
        },
    },
}
"""Kind -> dimension names and matrix shapes written as products of dimension names"""

INSTANCE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["kind", "ring", "dims", "matrices"],
    "properties": {
        "name": {"type": "string"},
        "kind": {"type": "string"},
        "ring": {"type": "string", "pattern": r"^\s*(Z_?\d+|Q|QQ)\s*$"},
        "dims": {
            "type": "object",
            "additionalProperties": {"type": "integer", "minimum": 0},
        },
        "matrices": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": {
                        "anyOf": [
                            {"type": "integer"},
                            {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
                        ]
                    },
                },
            },
        },
    },
    "additionalProperties": False,
}
"""Schema of an instance file"""

# ------------------------------------------------------------------------------


##########
# SUITES #
##########


SUITES = {
    "algebra": ("monad", "dictionary", "properties"),
    "coalgebra": ("comonad", "dictionary", "properties"),
    "module": ("module",),
    "comodule": ("comodule",),
    "pairing": ("pairing", "comparison", "identities"),
    "entwining-module": ("lifting", "roundtrip"),
    "entwining-comodule": ("lifting", "roundtrip"),
    "entwining-product": ("entwined",),
    "entwining-coproduct": ("entwined",),
    "mixed": ("mixed", "kappa-tau", "lifted", "structures", "units"),
}
"""Kind -> accepted suite names, the first one is the default"""

CONSTRUCTIONS = {
    "mu-tilde": "algebra",
    "eta-tilde": "algebra",
    "mu-hat": "algebra",
    "delta-tilde": "coalgebra",
    "eps-tilde": "coalgebra",
    "delta-hat": "coalgebra",
    "entwined-product": "entwining-product",
    "entwined-coproduct": "entwining-coproduct",
    "related-adjunction": "pairing",
    "induced-monad": "pairing",
    "induced-comonad": "pairing",
}
"""Construction -> kind of the instance it starts from"""

SEARCH_FLAGS = {
    "algebra": ("unit-regular", "unit-symmetric", "mult-compatible", "r-unital", "weak"),
    "coalgebra": ("counit-regular", "counit-symmetric", "comult-compatible", "r-counital", "weak"),
    "pairing": (
        "alpha-regular",
        "beta-regular",
        "alpha-symmetric",
        "beta-symmetric",
        "semiadjoint",
        "adjunction",
    ),
    "entwining-product": ("weak", "diagrams"),
    "entwining-coproduct": ("weak", "diagrams"),
    "mixed": (
        "mon-rect",
        "mon-square",
        "com-rect",
        "com-square",
        "cond-ve",
        "eta-unit",
        "counit-2",
        "unit-2",
        "kappa-idempotent",
        "tau-idempotent",
        "kappa-tau-commute",
    ),
}
"""Kind cmd_search can enumerate -> flags a predicate may name"""

BASED_KINDS = ("entwining-product", "entwining-coproduct", "mixed")
"""Kinds whose search needs --base: the structures stay fixed, the law varies"""

FLAG_ALIASES = {
    "regular": "unit-regular",
    "symmetric": "unit-symmetric",
    "compatible": "mult-compatible",
    "coregular": "counit-regular",
    "cosymmetric": "counit-symmetric",
    "cocompatible": "comult-compatible",
}
"""Short names accepted in search predicates"""

# ------------------------------------------------------------------------------


########
# LAWS #
########


LAWS = {
    "oracle-domain": "α and β are defined on every test hom-set",
    "oracle-agrees": "hom-set oracle agrees with the closed-form flags",
    "roundtrip-action": "χ is a compatible natural functor action",
    "roundtrip-normalized": "λ' = Tϑ·λ",
    "roundtrip-stable": "λ'' = λ'",
    "roundtrip-same-lifts": "λ and λ' induce the same liftings",
    "entwined-weak": "the entwined structure is a weak (co)monad",
    "comult-compatible-reading": "δ compatibility matches a Sweedler reading",
    "mu-tilde-aeb": "μ̃(a⊗b) = a·e·b",
    "mu-hat-eaebe": "μ̂(a⊗b) = e·a·e·b·e",
    "delta-tilde-sweedler": "Δ̃(c) = Σ c1ε(c2) ⊗ c3",
    "delta-hat-sweedler": "Δ̂(c) = Σ ε(c1)c2ε(c3) ⊗ c4ε(c5)",
}
"""Flag name -> display label of the flags computed by the command surface"""

# ------------------------------------------------------------------------------


#############
# EXCEPTION #
#############


class CliException(Exception):
    """Base class for command line errors"""


class MalformedInstance(CliException):
    """Raised when an instance file cannot be read, validated or interpreted"""


class UnknownKind(CliException):
    """Raised when a kind, suite or construction is not supported"""
