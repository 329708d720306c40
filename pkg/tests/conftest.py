"""Shared construction caches: the algebras are immutable, so one instance
per rank serves the whole session."""

from functools import lru_cache

import pytest

from blvoa import LieAlgebra
from blvoa.uea import UEA


@lru_cache(maxsize=None)
def get_lie(rank: int) -> LieAlgebra:
    return LieAlgebra(rank)


@lru_cache(maxsize=None)
def get_engine(rank: int) -> UEA:
    return UEA(get_lie(rank))


@pytest.fixture(scope="session")
def lie():
    return get_lie


@pytest.fixture(scope="session")
def engine():
    return get_engine
