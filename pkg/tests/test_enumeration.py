import pytest

from semispace.core import GroundTooLarge, canonical_form, is_topology
from semispace.search.enumeration import (
    brute_force_families,
    enumerate_topologies,
    enumerate_up_to,
)

LABELED = {1: 1, 2: 4, 3: 29, 4: 355}
CLASSES = {1: 1, 2: 3, 3: 9, 4: 33}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_filter_oracle_counts(n):
    families = brute_force_families(n)
    assert len(families) == LABELED[n]
    assert all(is_topology(n, f) for f in families)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("canonical", [False, True])
def test_methods_agree(n, canonical):
    lattice = [s.opens for s in enumerate_topologies(n, canonical, method="lattice")]
    oracle = [s.opens for s in enumerate_topologies(n, canonical, method="filter")]
    assert lattice == oracle
    assert len(lattice) == (CLASSES if canonical else LABELED)[n]


def test_labeled_set_matches_oracle():
    assert {s.opens for s in enumerate_topologies(4)} == set(brute_force_families(4))


def test_five_points():
    assert sum(1 for _ in enumerate_topologies(5, up_to_homeo=True)) == 139
    assert sum(1 for _ in enumerate_topologies(5)) == 6942


def test_canonical_representatives_are_distinct():
    forms = [canonical_form(s) for s in enumerate_topologies(4, up_to_homeo=True)]
    assert len(set(forms)) == len(forms) == 33
    assert forms == sorted(forms)


def test_up_to_orders_by_size():
    sizes = [s.n for s in enumerate_up_to(3)]
    assert sizes == sorted(sizes) and len(sizes) == 1 + 3 + 9


def test_limits():
    with pytest.raises(GroundTooLarge):
        list(enumerate_topologies(6))
    with pytest.raises(GroundTooLarge):
        brute_force_families(5)
    with pytest.raises(ValueError):
        list(enumerate_topologies(3, method="magic"))
