"""Acceptance criteria, one test each.

Run ``python tests/test_acceptance.py`` for a one-line-per-criterion summary,
or ``pytest tests/test_acceptance.py -s`` to see the same lines under pytest.
"""

import contextlib
import io
import sys
import time

from semispace import cli
from semispace.axioms import axiom_paths, classify_space
from semispace.core import indiscrete, sierpinski, subset, Space
from semispace.search.enumeration import brute_force_families, enumerate_topologies
from semispace.search.properties import REGISTRY
from semispace.search.sweep import verify_theorems
from semispace.search.witness import ExhaustedNone, Witness, find_witness

LABELED = {2: 4, 3: 29, 4: 355}
CLASSES = {2: 3, 3: 9, 4: 33}

WITNESS_QUERIES = {
    "semi_open_meet": "EXISTS A, B: semi_open(A) AND semi_open(B) AND NOT semi_open(A & B)",
    "omega_not_T1": "semi_T_omega AND NOT semi_T1",
    "T1_not_omega": "semi_T1 AND NOT semi_T_omega",
    "omega_4_not_T0": "semi_T_omega_4 AND NOT semi_T0",
}


def report(number, title, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})")
    assert ok, detail


def test_enumeration_oracle_agreement():
    start = time.perf_counter()
    rows = []
    ok = True
    for n in (2, 3, 4):
        oracle = brute_force_families(n)
        oracle_classes = list(enumerate_topologies(n, True, method="filter"))
        fast = [s.opens for s in enumerate_topologies(n, method="lattice")]
        fast_classes = [s.opens for s in enumerate_topologies(n, True, method="lattice")]
        ok &= len(oracle) == len(fast) == LABELED[n] and set(fast) == set(oracle)
        ok &= len(fast_classes) == len(oracle_classes) == CLASSES[n]
        ok &= fast_classes == [s.opens for s in oracle_classes]
        rows.append(f"n={n}: {len(fast)}/{len(fast_classes)}")
    elapsed = time.perf_counter() - start
    report(1, "enumeration matches brute-force oracle", ok and elapsed < 10,
           f"{', '.join(rows)}; {elapsed:.2f}s < 10s")


def test_theorem_sweep():
    start = time.perf_counter()
    result = verify_theorems(4)
    elapsed = time.perf_counter() - start
    ok = result.passed and result.spaces_by_n[4] == 355 and len(result.results) == len(REGISTRY)
    report(2, "property sweep n<=4 has zero violations", ok and elapsed < 60,
           f"{len(result.results)} properties, {result.spaces_by_n[4]} spaces at n=4, "
           f"{len(result.violations)} violations, {elapsed:.2f}s < 60s")


def test_dual_path_agreement():
    disagreements = []
    routed = 0
    spaces = 0
    for space in enumerate_topologies(4):
        spaces += 1
        for flag, verdicts in axiom_paths(space).items():
            if len(verdicts) > 1:
                routed += 1
                if len(set(verdicts.values())) != 1:
                    disagreements.append((flag, space.opens))
    report(3, "every route agrees on every n=4 space", not disagreements and spaces == 355,
           f"{spaces} spaces, {routed} multi-route checks, {len(disagreements)} disagreements")


def test_fixture_profiles():
    sier = classify_space(sierpinski()).flags()
    expected = {
        "semi_T0": True, "semi_T1": False, "semi_T_omega": True,
        "semi_T_omega_4": True, "semi_T_3omega_8": True, "semi_T_5omega_8": True,
        "semi_R0": False, "weak_semi_R0": False, "semi_symmetric": False,
        "strongly_semi_symmetric": False, "condition_P": True, "B_eq_Bprime": True,
    }
    ind = classify_space(indiscrete(2))
    three = Space(3, [subset(s) for s in ([], [0], [1], [0, 1], [0, 1, 2])])
    checks = {
        "sierpinski": sier == expected,
        "indiscrete(2)": (not ind.semi_T0 and ind.semi_R0 and ind.semi_symmetric
                          and ind.condition_P),
        "three-point semi-T1": classify_space(three).semi_T1,
    }
    report(4, "fixture profiles", all(checks.values()),
           ", ".join(f"{k}={'ok' if v else 'MISMATCH'}" for k, v in checks.items()))


def test_witness_suite():
    start = time.perf_counter()
    a = find_witness(WITNESS_QUERIES["semi_open_meet"], n_max=4)
    b = find_witness(WITNESS_QUERIES["omega_not_T1"], n_max=4)
    c = find_witness(WITNESS_QUERIES["T1_not_omega"], n_max=4)
    d = find_witness(WITNESS_QUERIES["omega_4_not_T0"], n_max=4)
    elapsed = time.perf_counter() - start
    checks = {
        "a": isinstance(a, Witness) and a.space.n == 3
        and a.bindings == {"A": subset([0, 2]), "B": subset([1, 2])},
        "b": isinstance(b, Witness) and b.space.n == 2 and b.space == sierpinski(),
        "c": isinstance(c, ExhaustedNone) and c.n_max == 4,
        "d": isinstance(d, ExhaustedNone) and d.n_max == 4,
    }
    report(5, "witness suite", all(checks.values()) and elapsed < 30,
           ", ".join(f"({k}) {'ok' if v else 'MISMATCH'}" for k, v in checks.items())
           + f"; {elapsed:.2f}s < 30s")


def test_finite_pathology_documentation():
    names = ["semi_closure_is_semi_closed", "condition_P_holds"]
    result = verify_theorems(4, properties=[p for p in REGISTRY if p.name in names])
    closure = result.result("semi_closure_is_semi_closed")
    cond = result.result("condition_P_holds")
    ok = result.passed and closure.instances == 1 * 2 + 4 * 4 + 29 * 8 + 355 * 16
    ok &= cond.spaces == 1 + 4 + 29 + 355
    report(6, "semi-closures are semi-closed and condition (P) holds for n<=4", ok,
           f"{closure.instances} subset checks, {cond.spaces} spaces, "
           f"{len(result.violations)} violations")


def _capture(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = cli.main(argv)
    return code, buf.getvalue().encode()


def test_determinism():
    runs = [["verify", "--n-max", "4"]]
    runs += [["witness", "--query", q, "--n-max", "4"] for q in WITNESS_QUERIES.values()]
    identical = 0
    for argv in runs:
        first, second = _capture(argv), _capture(argv)
        identical += first == second and bool(first[1])
    report(7, "repeated runs are byte-identical", identical == len(runs),
           f"{identical}/{len(runs)} commands identical")


if __name__ == "__main__":
    failed = 0
    for test in (test_enumeration_oracle_agreement, test_theorem_sweep, test_dual_path_agreement,
                 test_fixture_profiles, test_witness_suite, test_finite_pathology_documentation,
                 test_determinism):
        try:
            test()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
