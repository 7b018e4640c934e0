import pytest

from semispace.core import Space, sierpinski, subset


def opens_of(n, *sets):
    return Space(n, [subset(s) for s in sets])


@pytest.fixture
def sier():
    return sierpinski()


@pytest.fixture
def three():
    """Two open points and one point in the closure of both."""
    return opens_of(3, [], [0], [1], [0, 1], [0, 1, 2])
