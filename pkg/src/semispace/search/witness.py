"""Least finite witnesses for predicate queries."""

from __future__ import annotations

from dataclasses import dataclass

from ..axioms import AxiomProfile, classify_space
from ..core import GroundTooLarge, Space
from .enumeration import MAX_ENUMERATION_POINTS, enumerate_up_to
from .query import Expr, evaluate, parse_query


@dataclass(frozen=True)
class Witness:
    space: Space
    bindings: dict[str, int]
    profile: AxiomProfile


@dataclass(frozen=True)
class ExhaustedNone:
    """No space on at most ``n_max`` points satisfies the query."""

    n_max: int
    spaces_checked: int


def find_witness(query: Expr | str, n_max: int = 4) -> Witness | ExhaustedNone:
    """Search canonical spaces in ascending canonical order for one satisfying ``query``.

    Queries are invariant under relabelling points, so checking one
    representative per homeomorphism class is exhaustive.
    """
    if isinstance(query, str):
        query = parse_query(query)
    if n_max > MAX_ENUMERATION_POINTS:
        raise GroundTooLarge(n_max, MAX_ENUMERATION_POINTS)
    checked = 0
    for space in enumerate_up_to(n_max, up_to_homeo=True):
        checked += 1
        ok, bindings = evaluate(query, space)
        if ok:
            return Witness(space, bindings, classify_space(space))
    return ExhaustedNone(n_max, checked)
