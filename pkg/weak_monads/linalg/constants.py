"""
Constants for the exact linear algebra layer

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


###############
# ENUMERATION #
###############


ENUMERATION_CAP = config.getint("ENUMERATION", "CAP", fallback=1 << 20)
"""Maximum number of candidates a single enumeration may yield"""

SMALL_MODULUS = 1 << 15
"""Largest modulus stored in int64 arrays; larger moduli use Python integers"""

# ------------------------------------------------------------------------------


#############
# EXCEPTION #
#############


class LinalgException(Exception):
    """Base class for exact linear algebra errors"""


class DimensionMismatch(LinalgException):
    """Raised when two maps cannot be composed or a matrix has the wrong shape"""


class RingMismatch(LinalgException):
    """Raised when two maps live over different rings"""


class NotIdempotent(LinalgException):
    """Raised when a map that must satisfy e∘e = e does not"""


class SplittingUnsupported(LinalgException):
    """Raised when a rank computation is requested over a ring that is not a field"""


class SplittingFailed(LinalgException):
    """Raised when a computed factorization i∘p does not split the idempotent"""


class EnumerationCapExceeded(LinalgException):
    """Raised when an enumeration would yield more candidates than allowed"""

    def __init__(self, required: int, cap: int):
        super().__init__(
            f"enumeration refused: {required} candidates required, cap is {cap}"
        )
        self.required = required
        self.cap = cap


class InvalidRing(LinalgException):
    """Raised when a ring descriptor or a scalar cannot be interpreted"""
