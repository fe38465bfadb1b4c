"""
Test the scan utilities

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

# Test
import pytest

# Bit masks
from bitarray import bitarray

# fast event loop
import uvloop

# Utilities
from weak_monads.utilities import ScanRunner, chunked, implies, set_indices

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


NAMES = ("even", "square")


def parity_and_square(candidate: int):
    return candidate % 2 == 0, int(candidate ** 0.5) ** 2 == candidate


@pytest.fixture()
def event_loop():
    """
    Set uvloop as the default event loop
    """
    loop = uvloop.Loop()
    yield loop
    loop.close()


class TestMasks:
    """
    Test the mask helpers
    """

    def test_implies(self):
        """
        Test implication between masks
        """
        assert implies(bitarray("0110"), bitarray("0111")), "subset"
        assert not implies(bitarray("1100"), bitarray("0111")), "candidate 0 breaks it"
        assert implies(bitarray("0000"), bitarray("0000")), "empty premise"

    def test_set_indices(self):
        """
        Test the selected positions
        """
        assert set_indices(bitarray("10110")) == [0, 2, 3], "positions of the set bits"
        assert set_indices(bitarray()) == [], "empty mask"

    def test_chunked(self):
        """
        Test that chunks keep the stream order
        """
        assert list(chunked(range(7), 3)) == [[0, 1, 2], [3, 4, 5], [6]], "ordered chunks"
        assert list(chunked([], 3)) == [], "no chunk"


class TestScanRunner:
    """
    Test the scan runner
    """

    @pytest.mark.asyncio
    async def test_scan(self):
        """
        Test that the chunks are merged in stream order
        """
        masks = await ScanRunner(chunk=3).scan(range(10), parity_and_square, NAMES)
        assert masks["even"] == bitarray("1010101010"), "parity mask"
        assert set_indices(masks["square"]) == [0, 1, 4, 9], "squares below 10"

    @pytest.mark.parametrize("chunk", [1, 4, 64])
    def test_run_scan(self, chunk):
        """
        Test that the chunk size does not change the outcome
        """
        masks = ScanRunner(chunk=chunk).run_scan(range(10), parity_and_square, NAMES)
        assert set_indices(masks["even"]) == [0, 2, 4, 6, 8], "parity mask"
        assert masks["square"].count() == 4, "squares below 10"

    def test_empty(self):
        """
        Test an empty candidate stream
        """
        masks = ScanRunner().run_scan([], parity_and_square, NAMES)
        assert all(len(mask) == 0 for mask in masks.values()), "no candidate"
