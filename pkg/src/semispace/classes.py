"""Membership predicates for the generalized set classes built on the semi-kernel.

Several predicates accept ``via=`` to select an alternative but equivalent
formulation. The default is the cheapest one; the others exist so the test
harness can check that the formulations agree.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .core import Space, submasks
from .semiops import (
    covee,
    is_semi_closed,
    is_semi_open,
    kernel,
    semi_closed_family,
    semi_closure,
    semi_interior,
    semi_open_family,
)


def _unknown(via: str) -> ValueError:
    return ValueError(f"unknown formulation {via!r}")


def is_wedge_set(space: Space, a: int) -> bool:
    return kernel(space, a) == a


def is_vee_set(space: Space, a: int) -> bool:
    return covee(space, a) == a


def is_sg_star_closed(space: Space, a: int, via: str = "kernel") -> bool:
    """Some semi-closed F satisfies ``a <= F <= kernel(a)``.

    via="kernel"       scan semi-closed supersets against the kernel
    via="definition"   F must lie inside every semi-open superset of ``a``
    via="residue"      some semi-closed F >= a leaves a residue F - a that
                       contains no non-void semi-closed set
    """
    if via == "kernel":
        k = kernel(space, a)
        return any(a & ~f == 0 and f & ~k == 0 for f in semi_closed_family(space))
    if via == "definition":
        opens_over = [u for u in semi_open_family(space) if a & ~u == 0]
        return any(
            a & ~f == 0 and all(f & ~u == 0 for u in opens_over)
            for f in semi_closed_family(space)
        )
    if via == "residue":
        sc = semi_closed_family(space)
        for f in sc:
            if a & ~f:
                continue
            residue = f & ~a
            if not any(c and c & ~residue == 0 for c in sc):
                return True
        return False
    raise _unknown(via)


def is_sg_star_open(space: Space, a: int) -> bool:
    return is_sg_star_closed(space, space.full & ~a)


def is_g_wedge_set(space: Space, a: int) -> bool:
    """The kernel of ``a`` lies inside every semi-closed superset of ``a``."""
    k = kernel(space, a)
    return all(k & ~f == 0 for f in semi_closed_family(space) if a & ~f == 0)


def is_g_vee_set(space: Space, a: int) -> bool:
    return is_g_wedge_set(space, space.full & ~a)


def _wedge_sets(space: Space) -> tuple[int, ...]:
    return space.cached(
        "wedge_sets", lambda: tuple(m for m in space.subsets() if is_wedge_set(space, m))
    )


def _semi_closures(space: Space) -> tuple[int, ...]:
    return space.cached(
        "semi_closures", lambda: tuple(sorted({semi_closure(space, p) for p in space.subsets()}))
    )


def is_slambda_closed(space: Space, a: int, via: str = "kernel_scl") -> bool:
    """``a`` equals the intersection of its kernel and its semi-closure.

    via="kernel_scl"     a == kernel(a) & scl(a)
    via="decomposition"  a == K & scl(P) for some wedge-set K and subset P
    via="kernel_any"     a == kernel(a) & scl(P) for some subset P
    via="wedge_scl"      a == K & scl(a) for some wedge-set K
    """
    if via == "kernel_scl":
        return kernel(space, a) & semi_closure(space, a) == a
    if via == "decomposition":
        closures = _semi_closures(space)
        return any(k & c == a for k in _wedge_sets(space) for c in closures)
    if via == "kernel_any":
        k = kernel(space, a)
        return any(k & c == a for c in _semi_closures(space))
    if via == "wedge_scl":
        c = semi_closure(space, a)
        return any(k & c == a for k in _wedge_sets(space))
    raise _unknown(via)


def decompose_slambda(space: Space, a: int) -> tuple[int, int] | None:
    """Witness ``(K, P)`` with K a wedge-set and ``a == K & scl(P)``, if any."""
    k = kernel(space, a)
    if k & semi_closure(space, a) != a:
        return None
    return k, a


def _vee_sets(space: Space) -> tuple[int, ...]:
    return space.cached(
        "vee_sets", lambda: tuple(m for m in space.subsets() if is_vee_set(space, m))
    )


def _semi_interiors(space: Space) -> tuple[int, ...]:
    return space.cached(
        "semi_interiors",
        lambda: tuple(sorted({semi_interior(space, h) for h in space.subsets()})),
    )


def is_slambda_open(space: Space, a: int, via: str = "covee_sint") -> bool:
    """
    via="covee_sint"     a == covee(a) | sInt(a)
    via="decomposition"  a == N | sInt(H) for some vee-set N and subset H
    via="complement"     the complement of ``a`` is slambda-closed
    """
    if via == "covee_sint":
        return covee(space, a) | semi_interior(space, a) == a
    if via == "decomposition":
        interiors = _semi_interiors(space)
        return any(v | i == a for v in _vee_sets(space) for i in interiors)
    if via == "complement":
        return is_slambda_closed(space, space.full & ~a)
    raise _unknown(via)


def decompose_slambda_open(space: Space, a: int) -> tuple[int, int] | None:
    v = covee(space, a)
    if v | semi_interior(space, a) != a:
        return None
    return v, a


def sg_star_closed_table(space: Space) -> bytearray:
    def build():
        return bytearray(is_sg_star_closed(space, m) for m in space.subsets())

    return space.cached("sg_star_closed_table", build)


def sg_star_closure(space: Space, a: int) -> int:
    """Intersection of all sg*-closed supersets of ``a``.

    The result need not itself be sg*-closed.
    """
    table = sg_star_closed_table(space)
    acc = space.full
    # supersets of a are a | s for s ranging over submasks of the complement
    for extra in submasks(space.full & ~a):
        if table[a | extra]:
            acc &= a | extra
    return acc


def in_B(space: Space, a: int) -> bool:
    """The semi-closure of the complement of ``a`` is semi-closed."""
    return is_semi_closed(space, semi_closure(space, space.full & ~a))


def in_B_prime(space: Space, a: int) -> bool:
    """The sg*-closure of the complement of ``a`` is sg*-closed."""
    return bool(sg_star_closed_table(space)[sg_star_closure(space, space.full & ~a)])


@dataclass(frozen=True)
class SetClassification:
    subset: int
    semi_open: bool
    semi_closed: bool
    wedge: bool
    vee: bool
    g_wedge: bool
    g_vee: bool
    sg_star_closed: bool
    sg_star_open: bool
    slambda_closed: bool
    slambda_open: bool
    in_B: bool
    in_B_prime: bool

    def flags(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "subset"}


CLASS_FLAGS = tuple(f.name for f in fields(SetClassification) if f.name != "subset")


def classify_subset(space: Space, a: int) -> SetClassification:
    return SetClassification(
        subset=a,
        semi_open=is_semi_open(space, a),
        semi_closed=is_semi_closed(space, a),
        wedge=is_wedge_set(space, a),
        vee=is_vee_set(space, a),
        g_wedge=is_g_wedge_set(space, a),
        g_vee=is_g_vee_set(space, a),
        sg_star_closed=is_sg_star_closed(space, a),
        sg_star_open=is_sg_star_open(space, a),
        slambda_closed=is_slambda_closed(space, a),
        slambda_open=is_slambda_open(space, a),
        in_B=in_B(space, a),
        in_B_prime=in_B_prime(space, a),
    )


def census(space: Space) -> list[SetClassification]:
    """Classification of every subset, in mask order."""
    return space.cached("census", lambda: [classify_subset(space, m) for m in space.subsets()])

