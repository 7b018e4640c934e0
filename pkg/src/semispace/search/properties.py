"""Named properties checked on every enumerated space.

Each property is a predicate over a space (scope "space"), a space and a
subset ("subset"), or a space and an ordered pair of subsets ("pair").
A property that returns False on some instance is a violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .. import classes as C
from .. import semiops as S
from ..axioms import (
    axiom_paths,
    b_eq_bprime,
    classify_space,
    condition_P,
    semi_R0,
    semi_symmetric,
    strongly_semi_symmetric,
    weak_semi_R0,
)
from ..core import Space, SpaceError, closure, interior, is_subset, validate_space


@dataclass(frozen=True)
class Property:
    name: str
    statement: str
    scope: str
    check: Callable[..., bool]


REGISTRY: list[Property] = []


def prop(name: str, scope: str, statement: str):
    def register(fn):
        REGISTRY.append(Property(name, statement, scope, fn))
        return fn

    return register


def implies(p: bool, q: bool) -> bool:
    return not p or q


def _profile(space: Space) -> dict[str, bool]:
    return classify_space(space).flags()


def _points(space: Space):
    return [1 << x for x in range(space.n)]


# -- closure, interior and the semi-open calculus ------------------------------


@prop("interior_closure_duality", "subset", "int(A) = X - cl(X - A)")
def _(space, a):
    return interior(space, a) == space.complement(closure(space, space.complement(a)))


@prop("open_sets_semi_open", "space", "every open set is semi-open and every closed set semi-closed")
def _(space):
    return all(S.is_semi_open(space, g) for g in space.opens) and all(
        S.is_semi_closed(space, f) for f in space.closed
    )


@prop("semi_open_unions", "pair", "the union of two semi-open sets is semi-open")
def _(space, a, b):
    return implies(S.is_semi_open(space, a) and S.is_semi_open(space, b), S.is_semi_open(space, a | b))


@prop("semi_closed_intersections", "pair", "the intersection of two semi-closed sets is semi-closed")
def _(space, a, b):
    return implies(
        S.is_semi_closed(space, a) and S.is_semi_closed(space, b), S.is_semi_closed(space, a & b)
    )


@prop("semi_closure_is_semi_closed", "subset", "scl(A) is semi-closed")
def _(space, a):
    return S.is_semi_closed(space, S.semi_closure(space, a))


@prop("semi_closure_via_limit_points", "subset", "scl(A) = A | semi-derived set of A")
def _(space, a):
    return S.semi_closure(space, a) == a | S.semi_derived(space, a)


@prop("semi_interior_duality", "subset", "sInt(A) = X - scl(X - A)")
def _(space, a):
    return S.semi_interior(space, a) == space.complement(S.semi_closure(space, space.complement(a)))


@prop("semi_closure_idempotent", "subset", "scl(scl(A)) = scl(A)")
def _(space, a):
    c = S.semi_closure(space, a)
    return S.semi_closure(space, c) == c


@prop("kernel_covee_extremes", "space", "kernel and covee fix the empty set and X")
def _(space):
    full = space.full
    return (
        S.kernel(space, 0) == 0
        and S.covee(space, 0) == 0
        and S.kernel(space, full) == full
        and S.covee(space, full) == full
    )


@prop("kernel_extensive_covee_intensive", "subset", "A <= kernel(A) and covee(A) <= A")
def _(space, a):
    return is_subset(a, S.kernel(space, a)) and is_subset(S.covee(space, a), a)


@prop("kernel_covee_idempotent", "subset", "kernel and covee are idempotent")
def _(space, a):
    k = S.kernel(space, a)
    v = S.covee(space, a)
    return S.kernel(space, k) == k and S.covee(space, v) == v


@prop("kernel_monotone", "pair", "A <= B implies kernel(A) <= kernel(B)")
def _(space, a, b):
    return implies(is_subset(a, b), is_subset(S.kernel(space, a), S.kernel(space, b)))


@prop("covee_monotone", "pair", "A <= B implies covee(A) <= covee(B)")
def _(space, a, b):
    return implies(is_subset(a, b), is_subset(S.covee(space, a), S.covee(space, b)))


@prop("kernel_covee_complement_duality", "subset", "kernel(X - A) = X - covee(A) and covee(X - A) = X - kernel(A)")
def _(space, a):
    ca = space.complement(a)
    return S.kernel(space, ca) == space.complement(S.covee(space, a)) and S.covee(
        space, ca
    ) == space.complement(S.kernel(space, a))


@prop("kernel_union_additive", "pair", "kernel(A | B) = kernel(A) | kernel(B)")
def _(space, a, b):
    return S.kernel(space, a | b) == S.kernel(space, a) | S.kernel(space, b)


# -- set classes ----------------------------------------------------------------


@prop("class_implications", "subset",
      "semi-closed implies sg*-closed and slambda-closed; wedge implies slambda-closed; "
      "vee and semi-open imply slambda-open")
def _(space, a):
    c = C.classify_subset(space, a)
    return (
        implies(c.semi_closed, c.sg_star_closed)
        and implies(c.semi_closed, c.slambda_closed)
        and implies(c.wedge, c.slambda_closed)
        and implies(c.vee, c.slambda_open)
        and implies(c.semi_open, c.slambda_open)
        and c.slambda_closed == C.is_slambda_open(space, space.complement(a))
    )


@prop("sg_star_closed_forms_agree", "subset",
      "kernel form, defining form and semi-closed-residue form of sg*-closed agree")
def _(space, a):
    verdicts = {C.is_sg_star_closed(space, a, via=v) for v in ("kernel", "definition", "residue")}
    return len(verdicts) == 1


@prop("point_semi_closed_or_complement_sg_star_closed", "space",
      "each {x} is semi-closed or X - {x} is sg*-closed")
def _(space):
    return all(
        S.is_semi_closed(space, p) or C.is_sg_star_closed(space, space.complement(p))
        for p in _points(space)
    )


@prop("point_semi_open_or_g_vee", "space", "each {x} is semi-open or a g-vee-set")
def _(space):
    return all(S.is_semi_open(space, p) or C.is_g_vee_set(space, p) for p in _points(space))


@prop("wedge_sg_star_closed_iff_semi_closed", "subset",
      "for a wedge-set, sg*-closed iff semi-closed; in particular for kernel(A)")
def _(space, a):
    ok = implies(
        C.is_wedge_set(space, a),
        C.is_sg_star_closed(space, a) == S.is_semi_closed(space, a),
    )
    k = S.kernel(space, a)
    return ok and C.is_sg_star_closed(space, k) == S.is_semi_closed(space, k)


@prop("kernel_sg_star_closed_implies_sg_star_closed", "subset",
      "kernel(A) sg*-closed implies A sg*-closed")
def _(space, a):
    return implies(C.is_sg_star_closed(space, S.kernel(space, a)), C.is_sg_star_closed(space, a))


@prop("vee_sets_union_closed", "pair", "the union of two vee-sets is a vee-set")
def _(space, a, b):
    return implies(C.is_vee_set(space, a) and C.is_vee_set(space, b), C.is_vee_set(space, a | b))


@prop("vee_sets_intersection_closed", "pair", "the intersection of two vee-sets is a vee-set")
def _(space, a, b):
    return implies(C.is_vee_set(space, a) and C.is_vee_set(space, b), C.is_vee_set(space, a & b))


@prop("vee_sets_form_topology", "space", "the vee-sets are the open sets of a topology")
def _(space):
    family = [m for m in space.subsets() if C.is_vee_set(space, m)]
    try:
        validate_space(space.n, family)
    except SpaceError:
        return False
    return True


@prop("wedge_sets_intersection_closed", "pair", "the intersection of two wedge-sets is a wedge-set")
def _(space, a, b):
    return implies(
        C.is_wedge_set(space, a) and C.is_wedge_set(space, b), C.is_wedge_set(space, a & b)
    )


@prop("slambda_closed_forms_agree", "subset",
      "K & scl(P) decomposition, kernel & scl(P), K & scl(A) and kernel & scl(A) forms agree")
def _(space, a):
    verdicts = {
        C.is_slambda_closed(space, a, via=v)
        for v in ("decomposition", "kernel_any", "wedge_scl", "kernel_scl")
    }
    ok = len(verdicts) == 1
    d = C.decompose_slambda(space, a)
    if d is not None:
        k, p = d
        ok = ok and C.is_wedge_set(space, k) and k & S.semi_closure(space, p) == a
    return ok


@prop("slambda_open_forms_agree", "subset",
      "N | sInt(H) decomposition, covee | sInt form and complement form of slambda-open agree")
def _(space, a):
    verdicts = {
        C.is_slambda_open(space, a, via=v) for v in ("decomposition", "covee_sint", "complement")
    }
    ok = len(verdicts) == 1
    d = C.decompose_slambda_open(space, a)
    if d is not None:
        nv, h = d
        ok = ok and C.is_vee_set(space, nv) and nv | S.semi_interior(space, h) == a
    return ok


@prop("sg_star_and_slambda_closed_imply_semi_closed", "subset",
      "under B = B', sg*-closed and slambda-closed imply semi-closed")
def _(space, a):
    return implies(
        C.is_sg_star_closed(space, a) and C.is_slambda_closed(space, a) and b_eq_bprime(space),
        S.is_semi_closed(space, a),
    )


@prop("slambda_open_sg_star_open_imply_semi_open", "subset",
      "under B = B', slambda-open and sg*-open imply semi-open")
def _(space, a):
    return implies(
        C.is_slambda_open(space, a) and C.is_sg_star_open(space, a) and b_eq_bprime(space),
        S.is_semi_open(space, a),
    )


@prop("B_contains_every_subset", "subset", "scl(X - A) is semi-closed for every A")
def _(space, a):
    return C.in_B(space, a)


# -- axioms ------------------------------------------------------------------------


def _routes_agree(flag):
    def check(space):
        return len(set(axiom_paths(space)[flag].values())) == 1

    return check


ROUTED_FLAGS = (
    "semi_T0",
    "semi_T1",
    "semi_T_omega",
    "semi_T_omega_4",
    "semi_T_3omega_8",
    "semi_T_5omega_8",
)

for _flag in ROUTED_FLAGS:
    REGISTRY.append(
        Property(
            f"{_flag}_routes_agree",
            f"every route computing {_flag} gives the same verdict",
            "space",
            _routes_agree(_flag),
        )
    )


@prop("semi_T0_iff_singletons_slambda_closed", "space",
      "semi-T0 iff every singleton is slambda-closed")
def _(space):
    t0 = all(
        any(bool(u & p) != bool(u & q) for u in S.semi_open_family(space))
        for i, p in enumerate(_points(space))
        for q in _points(space)[i + 1:]
    )
    return t0 == all(C.is_slambda_closed(space, p) for p in _points(space))


@prop("semi_T1_iff_singletons_wedge", "space", "semi-T1 iff every singleton is a wedge-set")
def _(space):
    return _profile(space)["semi_T1"] == all(C.is_wedge_set(space, p) for p in _points(space))


@prop("semi_T_omega_iff_points_open_or_closed_and_B", "space",
      "semi-T_omega iff each singleton is semi-open or semi-closed and B = B'")
def _(space):
    lhs = all(
        S.is_semi_closed(space, a) for a in space.subsets() if C.is_sg_star_closed(space, a)
    )
    rhs = all(S.is_semi_open(space, p) or S.is_semi_closed(space, p) for p in _points(space))
    return lhs == (rhs and b_eq_bprime(space))


@prop("semi_T_omega_iff_all_slambda_closed_and_B", "space",
      "semi-T_omega iff every subset is slambda-closed and B = B'")
def _(space):
    lhs = all(
        S.is_semi_closed(space, a) for a in space.subsets() if C.is_sg_star_closed(space, a)
    )
    rhs = all(C.is_slambda_closed(space, a) for a in space.subsets())
    return lhs == (rhs and b_eq_bprime(space))


@prop("separation_chain", "space",
      "T_omega => T_5omega/8 => T_3omega/8 => T_omega/4 => T0")
def _(space):
    f = _profile(space)
    return (
        implies(f["semi_T_omega"], f["semi_T_5omega_8"])
        and implies(f["semi_T_5omega_8"], f["semi_T_3omega_8"])
        and implies(f["semi_T_3omega_8"], f["semi_T_omega_4"])
        and implies(f["semi_T_omega_4"], f["semi_T0"])
    )


@prop("finite_collapse_T_omega_4_3omega_8_5omega_8", "space",
      "on a finite ground set T_omega/4, T_3omega/8 and T_5omega/8 coincide")
def _(space):
    f = _profile(space)
    return f["semi_T_omega_4"] == f["semi_T_3omega_8"] == f["semi_T_5omega_8"]


@prop("T0_point_closures_asymmetric", "space",
      "semi-T0 implies p not in scl{q} or q not in scl{p} for p != q")
def _(space):
    if not _profile(space)["semi_T0"]:
        return True
    pts = _points(space)
    return all(
        not (S.semi_closure(space, q) & p) or not (S.semi_closure(space, p) & q)
        for p in pts
        for q in pts
        if p != q
    )


@prop("T1_iff_T0_and_R0", "space", "semi-T1 iff semi-T0 and semi-R0")
def _(space):
    f = _profile(space)
    return f["semi_T1"] == (f["semi_T0"] and semi_R0(space))


@prop("all_wedge_implies_T1", "space", "every subset a wedge-set implies semi-T1")
def _(space):
    return implies(all(C.is_wedge_set(space, a) for a in space.subsets()), _profile(space)["semi_T1"])


@prop("strongly_symmetric_implies_symmetric", "space", "strongly semi-symmetric implies semi-symmetric")
def _(space):
    return implies(strongly_semi_symmetric(space), semi_symmetric(space))


@prop("strongly_symmetric_T1_B_all_wedge", "space",
      "strongly semi-symmetric, semi-T1 and B = B' imply every subset is a wedge-set")
def _(space):
    f = _profile(space)
    hyp = f["strongly_semi_symmetric"] and f["semi_T1"] and f["B_eq_Bprime"]
    return implies(hyp, all(C.is_wedge_set(space, a) for a in space.subsets()))


@prop("R0_implies_weak_R0", "space", "semi-R0 implies weak semi-R0")
def _(space):
    return implies(semi_R0(space), weak_semi_R0(space))


@prop("T1_iff_T0_and_weak_R0", "space", "semi-T1 iff semi-T0 and weak semi-R0")
def _(space):
    f = _profile(space)
    return f["semi_T1"] == (f["semi_T0"] and weak_semi_R0(space))


@prop("strongly_symmetric_T1_B_implies_T_omega", "space",
      "strongly semi-symmetric, semi-T1 and B = B' imply semi-T_omega")
def _(space):
    f = _profile(space)
    return implies(
        f["strongly_semi_symmetric"] and f["semi_T1"] and f["B_eq_Bprime"], f["semi_T_omega"]
    )


_SIX = ("semi_T0", "semi_T1", "semi_T_omega", "semi_T_5omega_8", "semi_T_3omega_8", "semi_T_omega_4")


def _six_equal(f: dict[str, bool]) -> bool:
    return len({f[k] for k in _SIX}) == 1


@prop("axioms_equal_under_strong_symmetry_weak_R0_B", "space",
      "strongly semi-symmetric, weak semi-R0 and B = B' make the six separation axioms equivalent")
def _(space):
    f = _profile(space)
    return implies(
        f["strongly_semi_symmetric"] and f["weak_semi_R0"] and f["B_eq_Bprime"], _six_equal(f)
    )


@prop("symmetric_T0_implies_T1", "space", "semi-symmetric and semi-T0 imply semi-T1")
def _(space):
    f = _profile(space)
    return implies(f["semi_symmetric"] and f["semi_T0"], f["semi_T1"])


@prop("all_slambda_closed_implies_points_open_or_closed", "space",
      "every subset equal to the meet of its semi-open and semi-closed supersets "
      "implies each singleton is semi-open or semi-closed")
def _(space):
    def meet_of_supersets(a):
        acc = space.full
        for u in S.semi_open_family(space):
            if is_subset(a, u):
                acc &= u
        for f in S.semi_closed_family(space):
            if is_subset(a, f):
                acc &= f
        return acc

    hyp = all(meet_of_supersets(a) == a for a in space.subsets())
    return implies(
        hyp, all(S.is_semi_open(space, p) or S.is_semi_closed(space, p) for p in _points(space))
    )


@prop("axioms_equal_under_symmetry_and_B", "space",
      "semi-symmetric and B = B' make the six separation axioms equivalent")
def _(space):
    f = _profile(space)
    return implies(f["semi_symmetric"] and f["B_eq_Bprime"], _six_equal(f))


@prop("axioms_equal_under_symmetry_and_P", "space",
      "semi-symmetric and condition (P) make the six separation axioms equivalent")
def _(space):
    f = _profile(space)
    return implies(f["semi_symmetric"] and f["condition_P"], _six_equal(f))


@prop("T1_and_P_imply_T_omega", "space", "semi-T1 and condition (P) imply semi-T_omega")
def _(space):
    f = _profile(space)
    return implies(f["semi_T1"] and f["condition_P"], f["semi_T_omega"])


@prop("condition_P_holds", "space", "arbitrary intersections of closed sets are semi-closed")
def _(space):
    return condition_P(space)


def registry_names() -> list[str]:
    return [p.name for p in REGISTRY]
