import itertools
import pickle

import pytest
from hypothesis import given, settings, strategies as st

from semispace.core import (
    GroundTooLarge,
    MissingEmpty,
    MissingFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    Space,
    canonical_form,
    canonical_space,
    closure,
    complete_to_topology,
    discrete,
    format_subset,
    full_set,
    indiscrete,
    interior,
    is_topology,
    members,
    relabel,
    sierpinski,
    subset,
    validate_space,
)

from conftest import opens_of


def test_subset_round_trip():
    assert subset([0, 2, 5]) == 0b100101
    assert members(0b100101) == [0, 2, 5]
    assert format_subset(0) == "{}"
    assert full_set(3) == 7


def test_sierpinski_is_valid():
    s = validate_space(2, [0, 1, 3])
    assert s == sierpinski()
    assert s.opens == (0, 1, 3)


def test_missing_full():
    with pytest.raises(MissingFull):
        opens_of(2, [], [0], [1])


def test_missing_empty():
    with pytest.raises(MissingEmpty):
        opens_of(2, [0], [0, 1])


def test_union_failure_names_pair():
    with pytest.raises(NotClosedUnderUnion) as info:
        opens_of(3, [], [0], [1], [0, 1, 2])
    assert info.value.pair == (subset([0]), subset([1]))


def test_intersection_failure():
    with pytest.raises(NotClosedUnderIntersection):
        opens_of(3, [], [0, 1], [1, 2], [0, 1, 2])


def test_ground_too_large():
    with pytest.raises(GroundTooLarge):
        Space(17, [0, (1 << 17) - 1])
    with pytest.raises(GroundTooLarge):
        canonical_form(discrete(8))


def test_is_topology():
    assert is_topology(2, [0, 1, 3])
    assert not is_topology(2, [0, 1, 2])


def test_closure_examples(sier, three):
    assert closure(sier, 0b01) == 0b11
    assert closure(sier, 0b10) == 0b10
    assert closure(three, 0) == 0
    assert closure(three, subset([0])) == subset([0, 2])


def test_interior_examples(sier, three):
    assert interior(sier, 0b10) == 0
    assert interior(three, 7) == 7
    assert interior(three, subset([0, 2])) == subset([0])


def test_complete_to_topology(three):
    assert complete_to_topology(2, [0b01]) == sierpinski()
    assert complete_to_topology(3, [0b001, 0b010]) == three
    assert complete_to_topology(3, []) == indiscrete(3)


def test_canonical_form_examples(sier):
    twin = opens_of(2, [], [1], [0, 1])
    assert canonical_form(twin) == canonical_form(sier)
    assert canonical_form(discrete(2)) != canonical_form(sier)
    ind = indiscrete(3)
    for perm in itertools.permutations(range(3)):
        assert relabel(ind, perm) == ind
        assert canonical_form(relabel(ind, perm)) == canonical_form(ind)


def test_pickle_drops_cache(sier):
    closure(sier, 1)
    sier.cached("probe", lambda: 1)
    clone = pickle.loads(pickle.dumps(sier))
    assert clone == sier and clone._cache == {}


@st.composite
def spaces(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    sub = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=6))
    return complete_to_topology(n, sub)


@settings(max_examples=150, deadline=None)
@given(spaces(), st.data())
def test_canonical_form_relabel_invariant(space, data):
    perm = data.draw(st.permutations(range(space.n)))
    moved = relabel(space, perm)
    assert canonical_form(moved) == canonical_form(space)
    assert canonical_space(moved) == canonical_space(space)


@settings(max_examples=150, deadline=None)
@given(spaces(), st.data())
def test_closure_matches_closed_superset_meet(space, data):
    a = data.draw(st.integers(0, space.full))
    expected = space.full
    for f in space.closed:
        if a & ~f == 0:
            expected &= f
    assert closure(space, a) == expected
    assert interior(space, a) == space.full & ~closure(space, space.full & ~a)
