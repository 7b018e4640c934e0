"""JSON documents: spaces in, classification reports out.

Subsets are written as sorted lists of point indices; bit masks never leave
the process.
"""

from __future__ import annotations

import json
from typing import Sequence

from . import __version__
from .axioms import AxiomProfile, classify_space
from .classes import CLASS_FLAGS, census
from .core import Space, members, subset

ENGINE = f"semispace {__version__}"
SUBSET_TABLE_LIMIT = 6


class DocumentError(ValueError):
    pass


def decode_space(doc: dict) -> tuple[Space, list[str]]:
    """Space and point names from a ``{"points": [...], "opens": [[...], ...]}`` document.

    Raises DocumentError for malformed documents and a SpaceError subclass
    when the open sets do not form a topology.
    """
    if not isinstance(doc, dict):
        raise DocumentError("document must be an object")
    points = doc.get("points")
    opens = doc.get("opens")
    if not isinstance(points, list) or not points:
        raise DocumentError('"points" must be a non-empty list')
    if not all(isinstance(p, str) for p in points):
        raise DocumentError('"points" must contain strings')
    if len(set(points)) != len(points):
        raise DocumentError('"points" must be distinct')
    if not isinstance(opens, list):
        raise DocumentError('"opens" must be a list')
    n = len(points)
    masks = []
    for entry in opens:
        if not isinstance(entry, list) or not all(
            isinstance(i, int) and not isinstance(i, bool) for i in entry
        ):
            raise DocumentError("each open set must be a list of point indices")
        if len(set(entry)) != len(entry):
            raise DocumentError(f"open set {entry} repeats a point")
        for i in entry:
            if not 0 <= i < n:
                raise DocumentError(f"point index {i} out of range for {n} points")
        masks.append(subset(entry))
    if len(set(masks)) != len(masks):
        raise DocumentError('"opens" lists the same set twice')
    return Space(n, masks), list(points)


def encode_space(space: Space, points: Sequence[str] | None = None) -> dict:
    names = list(points) if points is not None else [str(i) for i in range(space.n)]
    return {"points": names, "opens": [members(m) for m in space.opens]}


def profile_document(profile: AxiomProfile) -> dict:
    return profile.flags()


def classification_report(
    space: Space, points: Sequence[str] | None = None, all_subsets: bool = False
) -> dict:
    profile = classify_space(space)
    doc = encode_space(space, points)
    doc = {"engine": ENGINE, **doc}
    doc["profile"] = profile_document(profile)
    doc["provenance"] = profile.provenance
    notes = list(profile.scale_notes)
    if space.n <= SUBSET_TABLE_LIMIT or all_subsets:
        doc["subsets"] = [
            {"subset": members(c.subset), **{f: getattr(c, f) for f in CLASS_FLAGS}}
            for c in census(space)
        ]
    else:
        doc["subsets"] = None
        notes.append(f"subset table omitted above {SUBSET_TABLE_LIMIT} points")
    doc["scale_notes"] = notes
    return doc


def dumps(doc: dict, compact: bool = False) -> str:
    if compact:
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(doc, indent=2, ensure_ascii=False)
