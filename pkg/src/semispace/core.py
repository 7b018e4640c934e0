"""Finite spaces, subsets as bit masks, closure/interior and canonical forms.

A subset of the ground set ``{0, ..., n-1}`` is a plain ``int`` whose bit ``i``
is set when point ``i`` belongs to it. A family of subsets is a tuple of such
ints, sorted ascending and free of duplicates.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 16
MAX_CANONICAL_POINTS = 7


class SpaceError(ValueError):
    """Base class for rejected open-set families."""


class MissingEmpty(SpaceError):
    def __init__(self) -> None:
        super().__init__("MissingEmpty: the empty set is not open")


class MissingFull(SpaceError):
    def __init__(self) -> None:
        super().__init__("MissingFull: the whole ground set is not open")


class NotClosedUnderUnion(SpaceError):
    def __init__(self, a: int, b: int) -> None:
        self.pair = (a, b)
        super().__init__(
            f"NotClosedUnderUnion: {format_subset(a)} | {format_subset(b)} is not open"
        )


class NotClosedUnderIntersection(SpaceError):
    def __init__(self, a: int, b: int) -> None:
        self.pair = (a, b)
        super().__init__(
            f"NotClosedUnderIntersection: {format_subset(a)} & {format_subset(b)} is not open"
        )


class GroundTooLarge(ValueError):
    def __init__(self, n: int, limit: int) -> None:
        self.n = n
        self.limit = limit
        super().__init__(f"GroundTooLarge: n={n} exceeds the limit {limit}")


# ---------------------------------------------------------------------------
# subset helpers


def full_set(n: int) -> int:
    return (1 << n) - 1


def subset(indices: Iterable[int]) -> int:
    """Bit mask with exactly the given point indices set."""
    mask = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative point index {i}")
        mask |= 1 << i
    return mask


def members(mask: int) -> list[int]:
    """Point indices of ``mask`` in ascending order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def complement(mask: int, n: int) -> int:
    return full_set(n) & ~mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, largest first, ending with 0."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def format_subset(mask: int) -> str:
    return "{" + ",".join(str(i) for i in members(mask)) + "}"


def check_fits(mask: int, n: int) -> None:
    if mask < 0 or mask >> n:
        raise ValueError(f"subset {mask:#x} does not fit a ground set of {n} points")


def make_family(masks: Iterable[int]) -> tuple[int, ...]:
    """Normalise to a sorted, duplicate-free tuple."""
    return tuple(sorted(set(masks)))


def family_contains(family: Sequence[int], mask: int) -> bool:
    i = bisect_left(family, mask)
    return i < len(family) and family[i] == mask


# ---------------------------------------------------------------------------
# spaces


def _check_ground(n: int) -> None:
    if n > MAX_POINTS:
        raise GroundTooLarge(n, MAX_POINTS)
    if n < 1:
        raise ValueError(f"ground size must be at least 1, got {n}")


def _first_violation(n: int, opens: Sequence[int]) -> SpaceError | None:
    full = full_set(n)
    present = set(opens)
    if 0 not in present:
        return MissingEmpty()
    if full not in present:
        return MissingFull()
    for i, a in enumerate(opens):
        for b in opens[i + 1:]:
            if a | b not in present:
                return NotClosedUnderUnion(a, b)
            if a & b not in present:
                return NotClosedUnderIntersection(a, b)
    return None


class Space:
    """A finite topological space given by its open sets.

    Instances are treated as immutable values. Derived families are computed
    lazily and cached; caching never changes what any method returns.
    """

    def __init__(self, n: int, opens: Iterable[int], *, _validated: bool = False) -> None:
        _check_ground(n)
        family = make_family(opens)
        if not _validated:
            for m in family:
                check_fits(m, n)
            err = _first_violation(n, family)
            if err is not None:
                raise err
        self.n = n
        self.full = full_set(n)
        self.opens = family
        self._cache: dict = {}

    def __repr__(self) -> str:
        sets = ", ".join(format_subset(m) for m in self.opens)
        return f"Space(n={self.n}, opens=[{sets}])"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Space):
            return NotImplemented
        return self.n == other.n and self.opens == other.opens

    def __hash__(self) -> int:
        return hash((self.n, self.opens))

    def __getstate__(self) -> dict:
        return {"n": self.n, "opens": self.opens}

    def __setstate__(self, state: dict) -> None:
        self.__init__(state["n"], state["opens"], _validated=True)

    def cached(self, key, compute):
        """Memoise ``compute()`` under ``key``; a racing second fill stores an equal value."""
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    def subsets(self) -> range:
        return range(1 << self.n)

    def points(self) -> range:
        return range(self.n)

    def complement(self, mask: int) -> int:
        return self.full & ~mask

    @cached_property
    def open_table(self) -> bytearray:
        table = bytearray(1 << self.n)
        for m in self.opens:
            table[m] = 1
        return table

    def is_open(self, mask: int) -> bool:
        return bool(self.open_table[mask])

    def is_closed(self, mask: int) -> bool:
        return bool(self.open_table[self.full & ~mask])

    @cached_property
    def closed(self) -> tuple[int, ...]:
        return make_family(self.full & ~m for m in self.opens)

    @cached_property
    def point_closures(self) -> tuple[int, ...]:
        """Closure of each singleton: the intersection of closed sets containing it."""
        out = []
        for x in range(self.n):
            bit = 1 << x
            acc = self.full
            for f in self.closed:
                if f & bit:
                    acc &= f
            out.append(acc)
        return tuple(out)

    @cached_property
    def point_neighbourhoods(self) -> tuple[int, ...]:
        """Smallest open set containing each point."""
        out = []
        for x in range(self.n):
            bit = 1 << x
            acc = self.full
            for g in self.opens:
                if g & bit:
                    acc &= g
            out.append(acc)
        return tuple(out)


def validate_space(n: int, opens: Iterable[int]) -> Space:
    """Check the topology axioms and return the space, or raise the first violation."""
    return Space(n, opens)


def is_topology(n: int, opens: Iterable[int]) -> bool:
    family = make_family(opens)
    return _first_violation(n, family) is None


def closure(space: Space, a: int) -> int:
    """Smallest closed superset of ``a``."""
    acc = 0
    pc = space.point_closures
    for x in members(a):
        acc |= pc[x]
    return acc


def interior(space: Space, a: int) -> int:
    """Largest open subset of ``a``."""
    acc = 0
    nb = space.point_neighbourhoods
    for x in members(a):
        if nb[x] & ~a == 0:
            acc |= 1 << x
    return acc


def complete_to_topology(n: int, subbasis: Iterable[int]) -> Space:
    """Smallest topology containing ``subbasis``."""
    _check_ground(n)
    family = {0, full_set(n)}
    for m in subbasis:
        check_fits(m, n)
        family.add(m)
    frontier = list(family)
    while frontier:
        new = set()
        current = list(family)
        for a in frontier:
            for b in current:
                for c in (a | b, a & b):
                    if c not in family and c not in new:
                        new.add(c)
        family |= new
        frontier = list(new)
    return Space(n, family, _validated=True)


def discrete(n: int) -> Space:
    return Space(n, range(1 << n), _validated=True)


def indiscrete(n: int) -> Space:
    return Space(n, (0, full_set(n)), _validated=True)


def sierpinski() -> Space:
    return Space(2, (0, 0b01, 0b11), _validated=True)


# ---------------------------------------------------------------------------
# relabelling and canonical forms


@lru_cache(maxsize=None)
def permutation_tables(n: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """For each permutation of ``range(n)``, the permutation and its mask image table."""
    out = []
    for perm in itertools.permutations(range(n)):
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            table[mask] = table[mask ^ low] | (1 << perm[low.bit_length() - 1])
        out.append((perm, tuple(table)))
    return tuple(out)


def relabel(space: Space, perm: Sequence[int]) -> Space:
    """Image of ``space`` under the point map ``i -> perm[i]``."""
    image = [0] * (1 << space.n)
    for mask in range(1, 1 << space.n):
        low = mask & -mask
        image[mask] = image[mask ^ low] | (1 << perm[low.bit_length() - 1])
    return Space(space.n, (image[m] for m in space.opens), _validated=True)


def serialize_family(n: int, family: Sequence[int]) -> bytes:
    """Ground size, member count, then each mask as two big-endian bytes."""
    out = bytearray((n, len(family) >> 8, len(family) & 0xFF))
    for m in family:
        out += m.to_bytes(2, "big")
    return bytes(out)


def canonical_family(space: Space, max_points: int = MAX_CANONICAL_POINTS) -> tuple[int, ...]:
    """Least sorted open family over all relabellings of the points."""
    if space.n > max_points:
        raise GroundTooLarge(space.n, max_points)
    best = None
    opens = space.opens
    for _, table in permutation_tables(space.n):
        cand = tuple(sorted(table[m] for m in opens))
        if best is None or cand < best:
            best = cand
    return best


def canonical_form(space: Space, max_points: int = MAX_CANONICAL_POINTS) -> bytes:
    """Byte string equal for two spaces exactly when they are homeomorphic."""
    return serialize_family(space.n, canonical_family(space, max_points))


def canonical_space(space: Space, max_points: int = MAX_CANONICAL_POINTS) -> Space:
    return Space(space.n, canonical_family(space, max_points), _validated=True)
