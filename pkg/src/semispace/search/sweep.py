"""Exhaustive property sweep over all topologies on small ground sets."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..core import Space, members
from .enumeration import enumerate_topologies
from .properties import REGISTRY, Property

DEFAULT_N_MAX = 4


@dataclass
class PropertyResult:
    name: str
    statement: str
    scope: str
    spaces: int = 0
    instances: int = 0
    violations: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class TheoremReport:
    n_max: int
    spaces_by_n: dict[int, int]
    results: list[PropertyResult]

    @property
    def violations(self) -> list[dict]:
        return [v for r in self.results for v in r.violations]

    @property
    def passed(self) -> bool:
        return not self.violations

    def result(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_document(self, timing: bool = False) -> dict:
        props = []
        for r in self.results:
            entry = {
                "name": r.name,
                "statement": r.statement,
                "scope": r.scope,
                "spaces": r.spaces,
                "instances": r.instances,
                "violations": r.violations,
            }
            if timing:
                entry["seconds"] = round(r.seconds, 6)
            props.append(entry)
        return {
            "n_max": self.n_max,
            "spaces": sum(self.spaces_by_n.values()),
            "spaces_by_n": {str(k): v for k, v in sorted(self.spaces_by_n.items())},
            "properties": props,
            "violations": self.violations,
            "passed": self.passed,
        }


def _violation(name: str, space: Space, subsets: tuple[int, ...]) -> dict:
    return {
        "property": name,
        "n": space.n,
        "opens": [members(m) for m in space.opens],
        "subsets": [members(s) for s in subsets],
    }


def check_space(space: Space, props: list[Property]) -> list[tuple[int, list[dict], float]]:
    """Instances checked, violations and elapsed seconds for each property on one space."""
    out = []
    full_range = range(1 << space.n)
    for p in props:
        start = time.perf_counter()
        bad = []
        if p.scope == "space":
            count = 1
            if not p.check(space):
                bad.append(_violation(p.name, space, ()))
        elif p.scope == "subset":
            count = len(full_range)
            for a in full_range:
                if not p.check(space, a):
                    bad.append(_violation(p.name, space, (a,)))
        elif p.scope == "pair":
            count = len(full_range) ** 2
            for a in full_range:
                for b in full_range:
                    if not p.check(space, a, b):
                        bad.append(_violation(p.name, space, (a, b)))
        else:
            raise ValueError(f"unknown property scope {p.scope!r}")
        out.append((count, bad, time.perf_counter() - start))
    return out


def _check_by_names(args: tuple[Space, tuple[str, ...]]):
    space, names = args
    wanted = [p for p in REGISTRY if p.name in names]
    return check_space(space, wanted)


def _violation_key(v: dict):
    return (v["property"], v["n"], v["opens"], v["subsets"])


def verify_theorems(
    n_max: int = DEFAULT_N_MAX,
    properties: list[Property] | None = None,
    workers: int | None = None,
) -> TheoremReport:
    """Evaluate every registered property on every topology with 1..n_max points.

    Violations are collected, never raised. With ``workers`` > 1 the spaces
    are checked in a process pool; the report does not depend on the worker
    count.
    """
    props = list(REGISTRY if properties is None else properties)
    results = [PropertyResult(p.name, p.statement, p.scope) for p in props]
    spaces_by_n: dict[int, int] = {}
    spaces = []
    for n in range(1, n_max + 1):
        found = list(enumerate_topologies(n))
        spaces_by_n[n] = len(found)
        spaces.extend(found)

    if workers and workers > 1:
        names = tuple(p.name for p in props)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_space = list(pool.map(_check_by_names, [(s, names) for s in spaces], chunksize=16))
    else:
        per_space = [check_space(s, props) for s in spaces]

    for outcome in per_space:
        for r, (count, bad, seconds) in zip(results, outcome):
            r.spaces += 1
            r.instances += count
            r.violations.extend(bad)
            r.seconds += seconds
    for r in results:
        r.violations.sort(key=_violation_key)
    return TheoremReport(n_max, spaces_by_n, results)
