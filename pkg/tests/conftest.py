import pytest

from posetswap import Poset


@pytest.fixture
def chain3():
    return Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def antichain3():
    return Poset(["a", "b", "c"])


@pytest.fixture
def diamond():
    """0 below x and y, both below 1; x and y incomparable."""
    return Poset(["0", "x", "y", "1"], [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")])


@pytest.fixture
def pair_plus_isolated():
    """a < b, with c unrelated to both."""
    return Poset(["a", "b", "c"], [("a", "b")])
