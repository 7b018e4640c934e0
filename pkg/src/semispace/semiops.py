"""Semi-open calculus on a finite space.

Families are computed once per space and kept in the space's cache together
with lookup tables indexed by mask.
"""

from __future__ import annotations

from .core import Space, closure, make_family, submasks


class EmptyArgument(ValueError):
    def __init__(self, which: str) -> None:
        super().__init__(f"EmptyArgument: {which} must be non-void")


def _semi_open_table(space: Space) -> bytearray:
    table = bytearray(1 << space.n)
    for g in space.opens:
        free = closure(space, g) & ~g
        for extra in submasks(free):
            table[g | extra] = 1
    return table


def semi_open_table(space: Space) -> bytearray:
    """Indicator of semi-open sets, indexed by mask."""
    return space.cached("semi_open_table", lambda: _semi_open_table(space))


def semi_closed_table(space: Space) -> bytearray:
    def build():
        so = semi_open_table(space)
        full = space.full
        return bytearray(so[full & ~m] for m in range(1 << space.n))

    return space.cached("semi_closed_table", build)


def semi_open_family(space: Space) -> tuple[int, ...]:
    """All A with G <= A <= cl(G) for some open G."""
    def build():
        table = semi_open_table(space)
        return tuple(m for m in range(1 << space.n) if table[m])

    return space.cached("semi_open", build)


def semi_closed_family(space: Space) -> tuple[int, ...]:
    def build():
        full = space.full
        return make_family(full & ~m for m in semi_open_family(space))

    return space.cached("semi_closed", build)


def is_semi_open(space: Space, a: int) -> bool:
    return bool(semi_open_table(space)[a])


def is_semi_closed(space: Space, a: int) -> bool:
    return bool(semi_closed_table(space)[a])


def _memo(space: Space, name: str, a: int, compute) -> int:
    return space.cached((name, a), compute)


def semi_closure(space: Space, a: int) -> int:
    """Intersection of all semi-closed supersets of ``a``."""
    def compute():
        acc = space.full
        for f in semi_closed_family(space):
            if a & ~f == 0:
                acc &= f
        return acc

    return _memo(space, "scl", a, compute)


def semi_interior(space: Space, a: int) -> int:
    """Union of all semi-open subsets of ``a``."""
    def compute():
        acc = 0
        for u in semi_open_family(space):
            if u & ~a == 0:
                acc |= u
        return acc

    return _memo(space, "sint", a, compute)


def semi_derived(space: Space, a: int) -> int:
    """Points every semi-open neighbourhood of which meets ``a`` minus the point."""
    sos = semi_open_family(space)
    out = 0
    for x in range(space.n):
        bit = 1 << x
        rest = a & ~bit
        if all(u & rest for u in sos if u & bit):
            out |= bit
    return out


def kernel(space: Space, a: int) -> int:
    """Semi-kernel: intersection of all semi-open supersets of ``a``."""
    def compute():
        acc = space.full
        for u in semi_open_family(space):
            if a & ~u == 0:
                acc &= u
        return acc

    return _memo(space, "kernel", a, compute)


def covee(space: Space, a: int) -> int:
    """Union of all semi-closed subsets of ``a``."""
    def compute():
        acc = 0
        for f in semi_closed_family(space):
            if f & ~a == 0:
                acc |= f
        return acc

    return _memo(space, "covee", a, compute)


def semi_separated(space: Space, a: int, b: int) -> bool:
    """Whether semi-open U >= a and V >= b exist with a & V and b & U both empty."""
    if a == 0:
        raise EmptyArgument("first set")
    if b == 0:
        raise EmptyArgument("second set")
    sos = semi_open_family(space)
    has_u = any(a & ~u == 0 and not (b & u) for u in sos)
    has_v = any(b & ~v == 0 and not (a & v) for v in sos)
    return has_u and has_v

