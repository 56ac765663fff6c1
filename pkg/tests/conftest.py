"""Shared fixtures."""

import random

import pytest

from twistmat.groups.index_set import IndexSet
from twistmat.rings.spec import RingSpec


@pytest.fixture
def rng():
    return random.Random(20240001)


@pytest.fixture
def ZZ():
    return RingSpec.integers()


@pytest.fixture
def Z6():
    return RingSpec.s_integers([2, 3])


@pytest.fixture
def F2():
    return RingSpec.finite_field(2)


@pytest.fixture
def F3():
    return RingSpec.finite_field(3)


@pytest.fixture
def R_f():
    """F_2[t, t^-1, (t^3+t+1)^-1]."""
    return RingSpec.localized_poly(2, [(1, 0, 1, 1)], True)


@pytest.fixture
def ix423():
    return IndexSet.of(4, {2, 3})


@pytest.fixture(autouse=True)
def _no_limit_override(monkeypatch):
    monkeypatch.delenv("TWISTMAT_LIMIT", raising=False)
