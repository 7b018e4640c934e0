import pytest

from semispace import axioms
from semispace.axioms import (
    AXIOM_FLAGS,
    DualPathDisagreement,
    axiom_paths,
    b_eq_bprime,
    classify_space,
    condition_P,
    semi_R0,
    semi_symmetric,
    semi_T0,
    semi_T1,
    semi_T_omega,
    strongly_semi_symmetric,
    weak_semi_R0,
)
from semispace.core import discrete, indiscrete, sierpinski
from semispace.search.enumeration import enumerate_topologies

SIERPINSKI_PROFILE = {
    "semi_T0": True,
    "semi_T1": False,
    "semi_T_omega": True,
    "semi_T_omega_4": True,
    "semi_T_3omega_8": True,
    "semi_T_5omega_8": True,
    "semi_R0": False,
    "weak_semi_R0": False,
    "semi_symmetric": False,
    "strongly_semi_symmetric": False,
    "condition_P": True,
    "B_eq_Bprime": True,
}


def test_sierpinski_profile(sier):
    assert classify_space(sier).flags() == SIERPINSKI_PROFILE


def test_discrete_all_true():
    for n in (1, 2, 3):
        assert all(classify_space(discrete(n)).flags().values())


def test_indiscrete_profile():
    for n in (2, 3):
        f = classify_space(indiscrete(n)).flags()
        for name in ("semi_T0", "semi_T1", "semi_T_omega", "semi_T_omega_4",
                     "semi_T_3omega_8", "semi_T_5omega_8"):
            assert f[name] is False
        for name in ("semi_R0", "weak_semi_R0", "semi_symmetric", "condition_P"):
            assert f[name] is True


def test_three_point_space_is_semi_T1(three):
    assert semi_T1(three)
    assert semi_T0(three) and semi_T_omega(three)


def test_single_flag_readers(sier):
    ind = indiscrete(2)
    assert semi_T0(sier) and not semi_T0(ind)
    assert not semi_T_omega(ind)
    assert semi_R0(ind) and not semi_R0(sier)
    assert weak_semi_R0(ind) and not weak_semi_R0(sier)
    assert semi_symmetric(ind) and not semi_symmetric(sier)
    assert not strongly_semi_symmetric(sier)
    assert condition_P(sier) and b_eq_bprime(sier)


def test_provenance_and_notes(sier):
    profile = classify_space(sier)
    assert set(profile.provenance) == set(AXIOM_FLAGS)
    assert len(profile.provenance["semi_T0"]) >= 2
    assert any("coincide" in note for note in profile.scale_notes)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_routes_agree_everywhere(n):
    for space in enumerate_topologies(n):
        for flag, verdicts in axiom_paths(space).items():
            assert len(set(verdicts.values())) == 1, (flag, space.opens, verdicts)


def test_disagreement_is_raised(monkeypatch):
    monkeypatch.setattr(axioms, "_t1_two_sided", lambda space: True)
    with pytest.raises(DualPathDisagreement) as info:
        classify_space(sierpinski())
    assert info.value.flag == "semi_T1"
