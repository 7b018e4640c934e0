"""Enumeration of all topologies on a small ground set."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from ..core import (
    GroundTooLarge,
    Space,
    canonical_family,
    full_set,
    permutation_tables,
    serialize_family,
)

MAX_ENUMERATION_POINTS = 5
MAX_FILTER_POINTS = 4


def brute_force_families(n: int) -> list[tuple[int, ...]]:
    """Every family containing the empty and full set that is closed under
    pairwise union and intersection, found by testing all candidate families.

    This is the reference oracle: 2**(2**n - 2) candidates, so n <= 4.
    """
    if n > MAX_FILTER_POINTS:
        raise GroundTooLarge(n, MAX_FILTER_POINTS)
    if n < 1:
        raise ValueError("n must be positive")
    full = full_set(n)
    proper = list(range(1, full))
    count = 1 << len(proper)
    codes = np.arange(count, dtype=np.int64)
    member = np.ones((count, full + 1), dtype=bool)
    for bit, s in enumerate(proper):
        member[:, s] = (codes >> bit) & 1 == 1
    ok = np.ones(count, dtype=bool)
    for a in range(full + 1):
        for b in range(a + 1, full + 1):
            both = member[:, a] & member[:, b]
            ok &= ~both | (member[:, a | b] & member[:, a & b])
    out = []
    for row in np.flatnonzero(ok):
        out.append(tuple(int(s) for s in np.flatnonzero(member[row])))
    return out


def _adjoin(family: tuple[int, ...], s: int) -> tuple[int, ...]:
    # in a lattice of sets closed under | and &, the lattice generated by
    # adding s is {a | (b & s) : a, b in family}
    return tuple(sorted({a | (b & s) for a in family for b in family}))


def _lattice_classes(n: int) -> list[tuple[int, ...]]:
    """Canonical open families of all topologies on n points, grown one set at a time."""
    full = full_set(n)
    start = canonical_family(Space(n, (0, full), _validated=True))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for family in frontier:
            present = set(family)
            for s in range(1, full):
                if s in present:
                    continue
                grown = _adjoin(family, s)
                canon = canonical_family(Space(n, grown, _validated=True))
                if canon not in seen:
                    seen.add(canon)
                    nxt.append(canon)
        frontier = nxt
    return sorted(seen, key=lambda f: serialize_family(n, f))


def _orbit(n: int, family: tuple[int, ...]) -> set[tuple[int, ...]]:
    return {tuple(sorted(table[m] for m in family)) for _, table in permutation_tables(n)}


def _family_key(n: int, family: tuple[int, ...]) -> bytes:
    return serialize_family(n, family)


def enumerate_topologies(
    n: int, up_to_homeo: bool = False, method: str = "auto"
) -> Iterator[Space]:
    """Yield every topology on ``n`` points exactly once.

    With ``up_to_homeo`` one canonical representative per homeomorphism class
    is yielded instead. Order is ascending by canonical form, then by the
    space's own serialized family.

    ``method`` is "filter" (test every candidate family, n <= 4), "lattice"
    (grow families by adjoining subsets, n <= 5) or "auto", which is the
    lattice route. The filter exists as an independent check on it.
    """
    if n > MAX_ENUMERATION_POINTS:
        raise GroundTooLarge(n, MAX_ENUMERATION_POINTS)
    if n < 1:
        raise ValueError("n must be positive")
    if method == "auto":
        method = "lattice"

    if method == "filter":
        by_class: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for family in brute_force_families(n):
            canon = canonical_family(Space(n, family, _validated=True))
            by_class.setdefault(canon, []).append(family)
        for canon in sorted(by_class, key=lambda f: _family_key(n, f)):
            if up_to_homeo:
                yield Space(n, canon, _validated=True)
                continue
            for family in sorted(by_class[canon], key=lambda f: _family_key(n, f)):
                yield Space(n, family, _validated=True)
        return

    if method == "lattice":
        for canon in _lattice_classes(n):
            if up_to_homeo:
                yield Space(n, canon, _validated=True)
                continue
            for family in sorted(_orbit(n, canon), key=lambda f: _family_key(n, f)):
                yield Space(n, family, _validated=True)
        return

    raise ValueError(f"unknown enumeration method {method!r}")


def enumerate_up_to(n_max: int, up_to_homeo: bool = True, method: str = "auto") -> Iterator[Space]:
    """All spaces on 1..n_max points, smallest ground sets first."""
    for n in range(1, n_max + 1):
        yield from enumerate_topologies(n, up_to_homeo=up_to_homeo, method=method)
