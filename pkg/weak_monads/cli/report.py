"""
Reports emitted by the command line

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
import re
from enum import Enum
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

# Exact linear algebra
from ..linalg import LinMap

# Diagram
from ..diagram import LawResult

# Command line
from .constants import EXIT_OK, EXIT_VIOLATION

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


_INDEXED = re.compile(r"^(?P<key>.+?)\[(?P<index>\d+)\]$")


########
# FLAG #
########


@dataclass(frozen=True)
class Flag:
    """One decided law, cited by its display label"""

    key: str
    label: str
    holds: bool
    witness: Optional[int] = None
    """First basis input on which the two sides differ"""

    index: Optional[int] = None
    """Test object the flag refers to, for per-object laws"""

    def to_dict(self) -> Dict[str, Any]:
        document = {"key": self.key, "label": self.label, "holds": self.holds}
        if self.witness is not None:
            document["witness"] = self.witness
        if self.index is not None:
            document["object"] = self.index
        return document


def _split(name: str) -> Tuple[str, Optional[int]]:
    match = _INDEXED.match(name)
    if match:
        return match.group("key"), int(match.group("index"))
    return name, None


def _label(key: str, laws: Mapping[str, str]) -> str:
    try:
        return laws[key]
    except KeyError:
        raise KeyError(f"flag {key!r} has no display label") from None


def flags_from_results(results: Mapping[str, LawResult], laws: Mapping[str, str]) -> List[Flag]:
    """
    Flags of a results mapping; ``name[i]`` keys are looked up as ``name``

    :param results: flag name -> decided equation
    :param laws: flag name -> display label
    """
    flags = []
    for name, result in results.items():
        key, index = _split(name)
        flags.append(Flag(key, _label(key, laws), result.holds, result.witness, index))
    return flags


def flags_from_booleans(values: Mapping[str, bool], laws: Mapping[str, str]) -> List[Flag]:
    """Flags of plain booleans, no witness"""
    flags = []
    for name, value in values.items():
        key, index = _split(name)
        flags.append(Flag(key, _label(key, laws), bool(value), None, index))
    return flags


# ------------------------------------------------------------------------------


##########
# REPORT #
##########


def encode(value: Any) -> Any:
    """JSON form of a payload value: maps as row lists, rationals as "p/q" strings"""
    if isinstance(value, LinMap):
        return [[value.ring.serialize(entry) for entry in row] for row in value.to_rows()]
    if isinstance(value, Mapping):
        return {str(key): encode(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(item) for item in value]
    if isinstance(value, Enum):
        return value.value
    return value


@dataclass(frozen=True)
class Report:
    """
    Outcome of one command on one instance. The exit code depends on the
    flags only.
    """

    instance: str
    operation: str
    flags: Tuple[Flag, ...]
    payload: Mapping[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(flag.holds for flag in self.flags)

    @property
    def failures(self) -> Tuple[Flag, ...]:
        return tuple(flag for flag in self.flags if not flag.holds)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.holds else EXIT_VIOLATION

    def flag(self, key: str) -> Flag:
        """First flag with the given key"""
        return next(flag for flag in self.flags if flag.key == key)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "instance": self.instance,
            "operation": self.operation,
            "holds": self.holds,
            "flags": [flag.to_dict() for flag in self.flags],
            "payload": encode(self.payload),
        }

    def to_json(self, indent: int = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def render_text(self) -> str:
        """Human readable form used by --pretty"""
        verdict = "holds" if self.holds else f"{len(self.failures)} violation(s)"
        lines = [f"{self.instance or '<unnamed>'} / {self.operation}: {verdict}"]
        for flag in self.flags:
            mark = "ok  " if flag.holds else "FAIL"
            where = f" [object {flag.index}]" if flag.index is not None else ""
            witness = f" (witness: basis input {flag.witness})" if flag.witness is not None else ""
            lines.append(f"  {mark} {flag.label}{where}{witness}")
        for key, value in self.payload.items():
            lines.append(f"  {key}: {json.dumps(encode(value), ensure_ascii=False)}")
        return "\n".join(lines)


def merge(instance: str, operation: str, parts: Iterable[Report]) -> Report:
    """Concatenate the flags and payloads of several reports"""
    flags: List[Flag] = []
    payload: Dict[str, Any] = {}
    for part in parts:
        flags.extend(part.flags)
        payload.update(part.payload)
    return Report(instance, operation, tuple(flags), payload)
