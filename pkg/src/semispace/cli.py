"""Command line: classify, verify, witness, enumerate.

Exit codes: 0 success, 1 property violation, 2 input error, 3 no witness.
Standard output carries JSON documents only; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .axioms import AXIOM_FLAGS, DualPathDisagreement
from .core import GroundTooLarge, SpaceError, members
from .documents import (
    DocumentError,
    classification_report,
    decode_space,
    dumps,
    encode_space,
    profile_document,
)
from .search.enumeration import MAX_ENUMERATION_POINTS, enumerate_topologies
from .search.query import QueryError
from .search.sweep import DEFAULT_N_MAX, verify_theorems
from .search.witness import ExhaustedNone, find_witness

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_EXHAUSTED = 3


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _input_error(exc: Exception) -> int:
    name, text = type(exc).__name__, str(exc)
    _err(f"error: {text}" if text.startswith(name) else f"error: {name}: {text}")
    return EXIT_INPUT


def _read_document(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def cmd_classify(args) -> int:
    try:
        space, points = decode_space(_read_document(args.file))
    except (OSError, json.JSONDecodeError, DocumentError, SpaceError, GroundTooLarge) as exc:
        return _input_error(exc)
    try:
        report = classification_report(space, points, all_subsets=args.all_subsets)
    except DualPathDisagreement as exc:
        _err(f"internal error: {exc}")
        return EXIT_VIOLATION
    if args.trace:
        for flag in AXIOM_FLAGS:
            routes = ", ".join(f"{k}={v}" for k, v in report["provenance"][flag].items())
            _err(f"{flag}: {routes}")
    print(dumps(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    cap = MAX_ENUMERATION_POINTS if args.allow_large else DEFAULT_N_MAX
    if not 1 <= args.n_max <= cap:
        _err(f"error: --n-max must be between 1 and {cap}"
             + ("" if args.allow_large else " (use --allow-large to raise the cap)"))
        return EXIT_INPUT
    start = time.perf_counter()
    report = verify_theorems(args.n_max, workers=args.workers)
    elapsed = time.perf_counter() - start
    for r in report.results:
        if r.violations:
            _err(f"FAIL {r.name}: {len(r.violations)} violation(s)")
    if args.timing:
        _err(f"checked {sum(report.spaces_by_n.values())} spaces in {elapsed:.2f}s")
    print(dumps(report.to_document(timing=args.timing)))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_witness(args) -> int:
    if not 1 <= args.n_max <= MAX_ENUMERATION_POINTS:
        _err(f"error: --n-max must be between 1 and {MAX_ENUMERATION_POINTS}")
        return EXIT_INPUT
    try:
        result = find_witness(args.query, args.n_max)
    except QueryError as exc:
        return _input_error(exc)
    doc = {"query": args.query, "n_max": args.n_max}
    if isinstance(result, ExhaustedNone):
        doc["witness"] = None
        doc["exhausted"] = True
        doc["spaces_checked"] = result.spaces_checked
        print(dumps(doc))
        return EXIT_EXHAUSTED
    witness = encode_space(result.space)
    witness["bindings"] = {k: members(v) for k, v in result.bindings.items()}
    witness["profile"] = profile_document(result.profile)
    doc["witness"] = witness
    doc["exhausted"] = False
    print(dumps(doc))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_ENUMERATION_POINTS:
        _err(f"error: --n must be between 1 and {MAX_ENUMERATION_POINTS}")
        return EXIT_INPUT
    count = 0
    out = sys.stdout
    for space in enumerate_topologies(args.n, up_to_homeo=args.canonical):
        out.write(dumps(encode_space(space), compact=True) + "\n")
        count += 1
    out.write(dumps({"count": count}, compact=True) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semispace", description="Semi-open set calculus on finite topological spaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a space document")
    p.add_argument("file", help="space document (JSON), or - for stdin")
    p.add_argument("--all-subsets", action="store_true", help="always include the subset table")
    p.add_argument("--trace", action="store_true", help="print every route's verdict to stderr")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check every registered property exhaustively")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--allow-large", action="store_true", help=f"allow --n-max up to {MAX_ENUMERATION_POINTS}")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="include per-property seconds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="least space satisfying a query")
    p.add_argument("--query", required=True)
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("enumerate", help="list all topologies on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--canonical", action="store_true", help="one space per homeomorphism class")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
