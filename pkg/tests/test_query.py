import pytest

from semispace.core import GroundTooLarge, discrete, indiscrete, sierpinski, subset
from semispace.search.query import QueryError, UnknownAtom, evaluate, parse_query
from semispace.search.witness import ExhaustedNone, Witness, find_witness


def test_space_atoms(sier):
    assert evaluate("semi_T_omega AND NOT semi_T1", sier)[0]
    assert not evaluate("semi_T1", sier)[0]
    assert evaluate("semi_T0 ∧ ¬semi_R0", sier)[0]
    assert evaluate("semi_T1 OR condition_P", indiscrete(2))[0]


def test_quantifiers_and_bindings(three):
    ok, bound = evaluate(
        "EXISTS A, B: semi_open(A) AND semi_open(B) AND NOT semi_open(A & B)", three)
    assert ok
    assert (bound["A"], bound["B"]) == (subset([0, 2]), subset([1, 2]))
    assert evaluate("FORALL A: semi_open(A)", discrete(2))[0]
    assert not evaluate("∀ A: semi_open(A)", sierpinski())[0]


def test_implicit_argument(sier):
    ok, bound = evaluate("EXISTS A: slambda_closed AND NOT sg_star_closed", sier)
    assert ok and bound == {"A": subset([0])}


def test_set_expressions(sier):
    assert evaluate("semi_closed({1})", sier)[0]
    assert evaluate("semi_open(~{1})", sier)[0]
    assert evaluate("equal({0} | {1}, X)", sier)[0]
    assert evaluate("equal(X - {0}, {1})", sier)[0]
    assert evaluate("semi_open(EMPTY)", sier)[0]
    assert not evaluate("semi_open({5})", sier)[0]


def test_errors():
    with pytest.raises(UnknownAtom):
        parse_query("nonsense_flag")
    with pytest.raises(QueryError):
        parse_query("semi_T0 AND")
    with pytest.raises(QueryError):
        parse_query("semi_open(A)")
    with pytest.raises(QueryError):
        parse_query("EXISTS A: subset(A)")


def test_witness_omega_not_T1():
    w = find_witness("semi_T_omega AND NOT semi_T1")
    assert isinstance(w, Witness)
    assert w.space.n == 2 and w.space == sierpinski()
    assert w.profile.semi_T_omega and not w.profile.semi_T1


def test_witness_semi_open_meet():
    w = find_witness("EXISTS A,B: semi_open(A) ∧ semi_open(B) ∧ ¬semi_open(A∩B)")
    assert w.space.n == 3
    assert w.space.opens == tuple(subset(s) for s in ([], [0], [1], [0, 1], [0, 1, 2]))
    assert w.bindings == {"A": subset([0, 2]), "B": subset([1, 2])}


@pytest.mark.parametrize("query", ["semi_T1 AND NOT semi_T_omega",
                                   "semi_T_omega_4 AND NOT semi_T0"])
def test_exhausted(query):
    result = find_witness(query, n_max=4)
    assert result == ExhaustedNone(4, 1 + 3 + 9 + 33)


def test_witness_limit():
    with pytest.raises(GroundTooLarge):
        find_witness("semi_T0", n_max=6)
