"""
Law checker command line

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
import argparse
import sys
from logging import Logger
from typing import Callable, Dict, List, Optional, Sequence

# Asynchronous libraries
import uvloop

# Weak monads
from .cli import (
    CONSTRUCTIONS,
    EXIT_MALFORMED,
    EXIT_OK,
    REPORT_INDENT,
    SEARCH_FLAGS,
    CliException,
    Report,
    cmd_check,
    cmd_construct,
    cmd_laws,
    cmd_oracle,
    cmd_search,
)
from .comonadics import ComonadicsException
from .diagram import DiagramException
from .entwine import EntwineException
from .linalg import EnumerationCapExceeded, LinalgException
from .mixed import MixedException
from .monadics import MonadicsException
from .pairing import SCAN_SEED, PairingException
from .utilities import WeakLogger


# Substitute asyncio loop with uvloop
uvloop.install()

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


PACKAGE_EXCEPTIONS = (
    CliException,
    LinalgException,
    DiagramException,
    MonadicsException,
    ComonadicsException,
    PairingException,
    EntwineException,
    MixedException,
)
"""Errors reported with exit code 2: bad input, refused request, unmet hypothesis"""


###############
# LAW CHECKER #
###############


class LawChecker:
    """
    A class that handles the command line: it parses the arguments,
    dispatches to the commands and turns their reports into exit codes
    """

    # Logger
    logger: Logger = WeakLogger.get_logger("LawChecker")

    @staticmethod
    def parser() -> argparse.ArgumentParser:
        """
        Build the argument parser with one sub-command per operation
        """
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--pretty", action="store_true", help="human readable report")
        common.add_argument("--cap", type=int, default=None, help="enumeration cap")

        parser = argparse.ArgumentParser(
            prog="weak-monads", description="Exact law checker for weak (co)monads"
        )
        commands = parser.add_subparsers(dest="command", required=True)

        check = commands.add_parser("check", parents=[common], help="run a law suite")
        check.add_argument("path", help="instance file")
        check.add_argument("--suite", default=None, help="suite name, or 'all'")

        construct = commands.add_parser(
            "construct", parents=[common], help="build a new instance"
        )
        construct.add_argument("path", help="instance file")
        construct.add_argument("construction", choices=sorted(CONSTRUCTIONS))
        construct.add_argument("--out", default=None, help="destination instance file")
        construct.add_argument(
            "--side", choices=("alpha", "beta"), default="alpha", help="regular side"
        )

        search = commands.add_parser(
            "search", parents=[common], help="enumerate and filter instances"
        )
        search.add_argument("kind", choices=sorted(SEARCH_FLAGS))
        search.add_argument("--dims", type=LawChecker.dims, default=(), help="e.g. 2 or 2,2")
        search.add_argument("--ring", default="Z2", help="ring descriptor")
        search.add_argument("--flags", default="", help="e.g. regular,!compatible")
        search.add_argument("--out", default=None, help="directory receiving the matches")
        search.add_argument("--seed", type=int, default=SCAN_SEED, help="sampling seed")
        search.add_argument("--samples", type=int, default=None, help="sample pairings")
        search.add_argument("--base", default=None, help="instance fixing the structures")

        oracle = commands.add_parser("oracle", parents=[common], help="run a hom-set oracle")
        oracle.add_argument("path", help="instance file")
        oracle.add_argument("--dims", type=int, default=None, help="largest test object")

        laws = commands.add_parser("laws", help="list every flag and its law")
        laws.add_argument("--markdown", action="store_true", help="LAWS.md tables")

        return parser

    @staticmethod
    def dims(text: str) -> List[int]:
        """
        Read a comma separated list of dimensions

        :param text: e.g. ``2`` or ``2,2``
        """
        try:
            return [int(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a dimension list: {text!r}") from None

    @staticmethod
    def dispatch(arguments: argparse.Namespace) -> Report:
        """
        Run the selected command
        """
        commands: Dict[str, Callable[[], Report]] = {
            "check": lambda: cmd_check(arguments.path, arguments.suite, arguments.cap),
            "construct": lambda: cmd_construct(
                arguments.path, arguments.construction, arguments.out, arguments.side
            ),
            "search": lambda: cmd_search(
                arguments.kind,
                arguments.dims,
                arguments.ring,
                arguments.flags,
                arguments.out,
                arguments.cap,
                arguments.seed,
                arguments.samples,
                arguments.base,
            ),
            "oracle": lambda: cmd_oracle(arguments.path, arguments.dims, arguments.cap),
        }
        return commands[arguments.command]()

    @staticmethod
    def run(argv: Optional[Sequence[str]] = None) -> int:
        """
        Parse the arguments, run the command and print its report

        :param argv: arguments, the process ones when None
        :return: exit code, 0 when every law holds, 1 on a violation,
            2 on malformed input or a refused request
        """
        try:
            arguments = LawChecker.parser().parse_args(argv)
        except SystemExit as error:
            # argparse exits with 2 on bad usage, 0 on --help
            return EXIT_OK if not error.code else EXIT_MALFORMED

        if arguments.command == "laws":
            print(cmd_laws(arguments.markdown))
            return EXIT_OK

        try:
            report = LawChecker.dispatch(arguments)

        except EnumerationCapExceeded as error:
            LawChecker.logger.error(f"refused: {error}")
            return EXIT_MALFORMED

        except PACKAGE_EXCEPTIONS as error:
            # preconditions carry the label of the failing law
            label = getattr(error, "label", None)
            message = f"precondition fails: {label}" if label else str(error)
            LawChecker.logger.error(f"{type(error).__name__}: {message}")
            return EXIT_MALFORMED

        if arguments.pretty:
            print(report.render_text())
        else:
            print(report.to_json(REPORT_INDENT))
        return report.exit_code


if __name__ == "__main__":
    sys.exit(LawChecker.run())
