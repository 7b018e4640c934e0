"""Space-level separation axioms and auxiliary conditions.

Every axiom with a known characterization is evaluated along each route
(the defining quantifier and the characterization). The routes must agree;
the reported flag is the characterization route.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import (
    in_B,
    in_B_prime,
    is_sg_star_closed,
    is_slambda_closed,
    is_wedge_set,
    sg_star_closed_table,
)
from .core import Space
from .semiops import (
    is_semi_closed,
    is_semi_open,
    semi_closed_family,
    semi_closure,
    semi_open_family,
)

AXIOM_FLAGS = (
    "semi_T0",
    "semi_T1",
    "semi_T_omega",
    "semi_T_omega_4",
    "semi_T_3omega_8",
    "semi_T_5omega_8",
    "semi_R0",
    "weak_semi_R0",
    "semi_symmetric",
    "strongly_semi_symmetric",
    "condition_P",
    "B_eq_Bprime",
)

FINITE_SCALE_NOTE = (
    "finite ground set: every subset is finite and countable, so semi_T_omega_4, "
    "semi_T_3omega_8 and semi_T_5omega_8 quantify over the same subsets and coincide"
)


class DualPathDisagreement(RuntimeError):
    def __init__(self, flag: str, verdicts: dict[str, bool]) -> None:
        self.flag = flag
        self.verdicts = verdicts
        super().__init__(f"DualPathDisagreement: {flag} {verdicts}")


def _pairs(space: Space):
    for x in range(space.n):
        for y in range(space.n):
            if x != y:
                yield 1 << x, 1 << y


# -- semi-T0 -----------------------------------------------------------------


def _t0_separating_semi_open(space: Space) -> bool:
    sos = semi_open_family(space)
    for x in range(space.n):
        for y in range(x + 1, space.n):
            bx, by = 1 << x, 1 << y
            if not any(bool(u & bx) != bool(u & by) for u in sos):
                return False
    return True


def _t0_semi_open_or_closed(space: Space) -> bool:
    candidates = set(semi_open_family(space)) | set(semi_closed_family(space))
    for bx, by in _pairs(space):
        if bx > by:
            continue
        if not any((a & bx and not a & by) or (a & by and not a & bx) for a in candidates):
            return False
    return True


def _singletons_slambda_closed(space: Space) -> bool:
    return all(is_slambda_closed(space, 1 << x) for x in range(space.n))


# -- semi-T1 -----------------------------------------------------------------


def _t1_two_sided(space: Space) -> bool:
    sos = semi_open_family(space)
    return all(any(u & bx and not u & by for u in sos) for bx, by in _pairs(space))


def _singletons_wedge(space: Space) -> bool:
    return all(is_wedge_set(space, 1 << x) for x in range(space.n))


# -- semi-T_omega --------------------------------------------------------------


def _tomega_definition(space: Space) -> bool:
    return all(
        is_semi_closed(space, a) for a in space.subsets() if is_sg_star_closed(space, a)
    )


def _singletons_open_or_closed(space: Space) -> bool:
    return all(
        is_semi_open(space, 1 << x) or is_semi_closed(space, 1 << x) for x in range(space.n)
    )


def _all_slambda_closed(space: Space) -> bool:
    return all(is_slambda_closed(space, a) for a in space.subsets())


def b_eq_bprime(space: Space) -> bool:
    return space.cached(
        "B_eq_Bprime",
        lambda: all(in_B(space, a) == in_B_prime(space, a) for a in space.subsets()),
    )


# -- subset-quantified separation ---------------------------------------------


def _finite_subsets(space: Space):
    # every subset of a finite ground set is finite
    return space.subsets()


def _countable_subsets(space: Space):
    # every subset of a finite ground set is countable
    return space.subsets()


def _arbitrary_subsets(space: Space):
    return space.subsets()


def _separating_family_for(space: Space, subsets) -> bool:
    """For each P in ``subsets`` and y outside P, some semi-open or semi-closed
    set contains P and misses y."""
    candidates = sorted(set(semi_open_family(space)) | set(semi_closed_family(space)))
    for p in subsets:
        for y in range(space.n):
            by = 1 << y
            if p & by:
                continue
            if not any(p & ~a == 0 and not a & by for a in candidates):
                return False
    return True


def _slambda_closed_over(space: Space, subsets) -> bool:
    return all(is_slambda_closed(space, p) for p in subsets)


# -- remaining conditions ------------------------------------------------------


def semi_R0(space: Space) -> bool:
    """Every semi-open set contains the semi-closure of each of its points."""
    for u in semi_open_family(space):
        for x in range(space.n):
            if u >> x & 1 and semi_closure(space, 1 << x) & ~u:
                return False
    return True


def weak_semi_R0(space: Space) -> bool:
    """Every slambda-closed singleton is a wedge-set."""
    return all(
        is_wedge_set(space, 1 << x)
        for x in range(space.n)
        if is_slambda_closed(space, 1 << x)
    )


def semi_symmetric(space: Space) -> bool:
    scl = [semi_closure(space, 1 << x) for x in range(space.n)]
    for x in range(space.n):
        for y in range(space.n):
            if scl[y] >> x & 1 and not scl[x] >> y & 1:
                return False
    return True


def strongly_semi_symmetric(space: Space) -> bool:
    table = sg_star_closed_table(space)
    return all(table[1 << x] for x in range(space.n))


def closed_meet_closure(space: Space) -> tuple[int, ...]:
    """Intersections of every subfamily of closed sets (the empty one gives X)."""
    family = {space.full, *space.closed}
    frontier = list(family)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(family):
                c = a & b
                if c not in family:
                    new.add(c)
        family |= new
        frontier = list(new)
    return tuple(sorted(family))


def condition_P(space: Space) -> bool:
    """Arbitrary intersections of closed sets are semi-closed."""
    return all(is_semi_closed(space, f) for f in closed_meet_closure(space))


# -- routes and profile ----------------------------------------------------------


def axiom_paths(space: Space) -> dict[str, dict[str, bool]]:
    """Verdict of every route for every flag. The last route listed is the reported one."""

    def build():
        b_ok = b_eq_bprime(space)
        return {
            "semi_T0": {
                "separating_semi_open": _t0_separating_semi_open(space),
                "semi_open_or_semi_closed": _t0_semi_open_or_closed(space),
                "singletons_slambda_closed": _singletons_slambda_closed(space),
            },
            "semi_T1": {
                "two_sided_separation": _t1_two_sided(space),
                "singletons_wedge": _singletons_wedge(space),
            },
            "semi_T_omega": {
                "sg_star_closed_are_semi_closed": _tomega_definition(space),
                "all_slambda_closed_and_B_eq_Bprime": _all_slambda_closed(space) and b_ok,
                "singletons_semi_open_or_closed_and_B_eq_Bprime": (
                    _singletons_open_or_closed(space) and b_ok
                ),
            },
            "semi_T_omega_4": {
                "finite_sets_separated": _separating_family_for(space, _finite_subsets(space)),
                "finite_sets_slambda_closed": _slambda_closed_over(
                    space, _finite_subsets(space)
                ),
            },
            "semi_T_3omega_8": {
                "countable_sets_separated": _separating_family_for(
                    space, _countable_subsets(space)
                ),
                "countable_sets_slambda_closed": _slambda_closed_over(
                    space, _countable_subsets(space)
                ),
            },
            "semi_T_5omega_8": {
                "all_sets_separated": _separating_family_for(space, _arbitrary_subsets(space)),
                "all_sets_slambda_closed": _slambda_closed_over(space, _arbitrary_subsets(space)),
            },
            "semi_R0": {"semi_open_contains_point_closures": semi_R0(space)},
            "weak_semi_R0": {"slambda_singletons_are_wedge": weak_semi_R0(space)},
            "semi_symmetric": {"point_closure_symmetry": semi_symmetric(space)},
            "strongly_semi_symmetric": {
                "singletons_sg_star_closed": strongly_semi_symmetric(space)
            },
            "condition_P": {"closed_meets_semi_closed": condition_P(space)},
            "B_eq_Bprime": {"collections_equal": b_ok},
        }

    return space.cached("axiom_paths", build)


@dataclass(frozen=True)
class AxiomProfile:
    semi_T0: bool
    semi_T1: bool
    semi_T_omega: bool
    semi_T_omega_4: bool
    semi_T_3omega_8: bool
    semi_T_5omega_8: bool
    semi_R0: bool
    weak_semi_R0: bool
    semi_symmetric: bool
    strongly_semi_symmetric: bool
    condition_P: bool
    B_eq_Bprime: bool
    provenance: dict[str, dict[str, bool]] = field(compare=False, repr=False)
    scale_notes: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in AXIOM_FLAGS}


def classify_space(space: Space) -> AxiomProfile:
    def build():
        paths = axiom_paths(space)
        flags = {}
        for name in AXIOM_FLAGS:
            verdicts = paths[name]
            values = set(verdicts.values())
            if len(values) != 1:
                raise DualPathDisagreement(name, verdicts)
            flags[name] = list(verdicts.values())[-1]
        notes = [FINITE_SCALE_NOTE]
        return AxiomProfile(
            **flags,
            provenance={k: dict(v) for k, v in paths.items()},
            scale_notes=tuple(notes),
        )

    return space.cached("profile", build)


def _flag(name: str):
    def read(space: Space) -> bool:
        return getattr(classify_space(space), name)

    read.__name__ = name
    read.__doc__ = f"The {name} flag of the space, after cross-checking every route."
    return read


semi_T0 = _flag("semi_T0")
semi_T1 = _flag("semi_T1")
semi_T_omega = _flag("semi_T_omega")
semi_T_omega_4 = _flag("semi_T_omega_4")
semi_T_3omega_8 = _flag("semi_T_3omega_8")
semi_T_5omega_8 = _flag("semi_T_5omega_8")
B_eq_Bprime = b_eq_bprime
