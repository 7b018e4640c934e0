import pytest

from semispace.core import closure, discrete, indiscrete, subset
from semispace.semiops import (
    EmptyArgument,
    covee,
    is_semi_closed,
    is_semi_open,
    kernel,
    semi_closed_family,
    semi_closure,
    semi_derived,
    semi_interior,
    semi_open_family,
    semi_separated,
)


def fam(*sets):
    return tuple(sorted(subset(s) for s in sets))


def brute_semi_open(space, a):
    return any(g & ~a == 0 and a & ~closure(space, g) == 0 for g in space.opens)


def test_semi_open_families(sier, three):
    assert semi_open_family(sier) == fam([], [0], [0, 1])
    assert semi_open_family(three) == fam([], [0], [1], [0, 1], [0, 2], [1, 2], [0, 1, 2])
    assert len(semi_open_family(discrete(3))) == 8
    assert semi_open_family(indiscrete(2)) == fam([], [0, 1])


def test_semi_open_matches_definition(three):
    for a in range(8):
        assert is_semi_open(three, a) == brute_semi_open(three, a)
        assert is_semi_closed(three, a) == brute_semi_open(three, 7 & ~a)
    assert set(semi_closed_family(three)) == {7 & ~a for a in semi_open_family(three)}


def test_membership(sier, three):
    assert not is_semi_open(sier, 0b10) and is_semi_closed(sier, 0b10)
    assert is_semi_open(sier, 0) and is_semi_closed(sier, 0)
    assert is_semi_open(three, subset([0, 2]))


def test_intersection_of_semi_open_sets_can_fail(three):
    a, b = subset([0, 2]), subset([1, 2])
    assert is_semi_open(three, a) and is_semi_open(three, b)
    assert not is_semi_open(three, a & b)


def test_semi_closure_and_interior(sier, three):
    assert semi_closure(sier, 0b01) == 0b11
    assert semi_closure(sier, 0b10) == 0b10
    assert semi_closure(sier, 0b11) == 0b11
    assert semi_interior(sier, 0b10) == 0
    assert semi_interior(sier, 0b11) == 0b11
    assert semi_interior(three, subset([2])) == 0


def test_semi_derived(sier):
    assert semi_derived(sier, 0b01) == 0b10
    assert semi_derived(sier, 0b10) == 0
    d = discrete(3)
    assert all(semi_derived(d, a) == 0 for a in range(8))


def test_kernel_and_covee(sier, three):
    assert kernel(sier, 0b10) == 0b11
    assert kernel(sier, 0b01) == 0b01
    assert covee(sier, 0b01) == 0
    assert covee(sier, 0b10) == 0b10
    for s in (sier, three):
        assert kernel(s, s.full) == s.full
        assert covee(s, 0) == 0


def test_semi_separated(sier):
    assert semi_separated(discrete(2), 0b01, 0b10)
    assert not semi_separated(indiscrete(2), 0b01, 0b10)
    assert not semi_separated(sier, 0b01, 0b10)
    with pytest.raises(EmptyArgument):
        semi_separated(sier, 0, 0b01)
