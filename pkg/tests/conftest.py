import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdlab import named  # noqa: E402


@functools.lru_cache(maxsize=None)
def group(spec: str):
    """Groups are immutable apart from their memo cache, so tests share them."""
    return named(spec, max_order=4096)


@pytest.fixture
def G():
    return group


def masks(subgroups) -> set[int]:
    return {H.mask for H in subgroups}


def as_mask(elements) -> int:
    return sum(1 << i for i in elements)
