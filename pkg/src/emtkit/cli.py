"""Command-line entry point.

Subcommands: validate, emtfy, functor, limit, colimit, verify, adjunction,
theoremb, suite.  Reports are JSON on stdout (or ``--out``); exit status 0
means pass, 1 a mathematical failure with a witness in the report, 2 a
usage or parse error, and 3 an inconclusive outcome (a cap was exceeded).
Identical arguments, files and seeds produce byte-identical reports.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .adjunctions import check_adjunction
from .caps import caps_from_env
from .category import colimit, limit, verify_universal
from .errors import CapExceeded, CoherenceError, DomainError, ParseError
from .functors import apply_functor
from .generate import GenConfig, random_instance
from .serialize import (cone_cert_to_doc, diagram_from_doc, dumps, functor_result_to_doc,
                        space_from_doc, space_to_doc, validate_space_doc)
from .suite import run_suite
from .theoremb import theoremb_check
from .verdicts import FAIL, INCONCLUSIVE, PASS

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_STATUS_EXIT = {PASS: EXIT_PASS, FAIL: EXIT_FAIL, INCONCLUSIVE: EXIT_INCONCLUSIVE}


def _read_doc(args) -> dict:
    text = sys.stdin.read() if args.infile is None else open(args.infile).read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("/", f"not JSON: {exc}") from None


def _emit(args, doc: dict) -> None:
    text = dumps(doc)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as handle:
            handle.write(text)


def _cmd_validate(args) -> int:
    doc = _read_doc(args)
    if isinstance(doc, dict) and "objects" in doc:
        diagram = diagram_from_doc(doc)
        from .category import validate_diagram
        verdict = validate_diagram(diagram)
    else:
        verdict = validate_space_doc(doc)
    _emit(args, {"verdict": verdict.to_doc()})
    return _STATUS_EXIT[verdict.status]


def _cmd_functor(args, name: str | None = None) -> int:
    doc = _read_doc(args)
    s = space_from_doc(doc)
    res = apply_functor(name or args.name, s)
    _emit(args, functor_result_to_doc(res))
    return EXIT_PASS


def _cmd_limit(args, which) -> int:
    d = diagram_from_doc(_read_doc(args))
    cert = which(d)
    _emit(args, cone_cert_to_doc(cert))
    return EXIT_PASS


def _cmd_verify(args) -> int:
    from .category import default_probe_pool
    d = diagram_from_doc(_read_doc(args))
    probes = default_probe_pool(d.category, extras=d.objects, max_points=args.probe_max)
    reports = {}
    status = PASS
    sides = {"limit": limit, "colimit": colimit} if args.side == "both" \
        else {args.side: {"limit": limit, "colimit": colimit}[args.side]}
    for label, build in sides.items():
        cert = build(d)
        verdict = verify_universal(d, cert, probes)
        reports[label] = verdict.to_doc()
        if _STATUS_EXIT[verdict.status] > _STATUS_EXIT[status]:
            status = verdict.status
    _emit(args, {"verify": reports})
    return _STATUS_EXIT[status]


def _cmd_adjunction(args) -> int:
    if args.seed is not None:
        from .suite import _adjunction_pair
        rng = random.Random(args.seed)
        results = []
        status = PASS
        for _ in range(args.count):
            left, right = _adjunction_pair(rng, args.name)
            verdict = check_adjunction(args.name, left, right)
            results.append(verdict.to_doc())
            if _STATUS_EXIT[verdict.status] > _STATUS_EXIT[status]:
                status = verdict.status
        _emit(args, {"adjunction": args.name, "pairs": results})
        return _STATUS_EXIT[status]
    doc = _read_doc(args)
    left = space_from_doc(doc.get("left", {}), "/left")
    right = space_from_doc(doc.get("right", {}), "/right")
    verdict = check_adjunction(args.name, left, right)
    _emit(args, {"adjunction": args.name, "verdict": verdict.to_doc()})
    return _STATUS_EXIT[verdict.status]


def _cmd_theoremb(args) -> int:
    s = space_from_doc(_read_doc(args))
    report = theoremb_check(s, relaxed=args.relaxed)
    verdict = report.verdict()
    _emit(args, {"theoremb": report.to_doc(), "verdict": verdict.to_doc()})
    return _STATUS_EXIT[verdict.status]


def _cmd_generate(args) -> int:
    cfg = GenConfig(seed=args.seed or 0, max_points=args.points)
    _emit(args, space_to_doc(random_instance(cfg)))
    return EXIT_PASS


def _cmd_suite(args) -> int:
    results = run_suite(seed=args.seed or 0, count=args.count)
    totals = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
    for r in results:
        totals[r.verdict.status] += 1
    if args.table:
        width = max(len(r.name) for r in results)
        lines = [f"{r.name.ljust(width)}  {r.verdict.status.upper():12s} "
                 f"{r.verdict.detail}" for r in results]
        lines.append(f"{'totals'.ljust(width)}  pass={totals[PASS]} "
                     f"fail={totals[FAIL]} inconclusive={totals[INCONCLUSIVE]}")
        text = "\n".join(lines) + "\n"
        if args.out is None:
            sys.stdout.write(text)
        else:
            with open(args.out, "w") as handle:
                handle.write(text)
    else:
        _emit(args, {"checks": [r.to_doc() for r in results],
                     "totals": {"pass": totals[PASS], "fail": totals[FAIL],
                                "inconclusive": totals[INCONCLUSIVE]}})
    if totals[FAIL]:
        return EXIT_FAIL
    if totals[INCONCLUSIVE]:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emtkit",
        description="Exact finite-scale computations for topologies with extended distances.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--in", dest="infile", default=None, help="input file (default stdin)")
        if out:
            p.add_argument("--out", default=None, help="output file (default stdout)")

    common(sub.add_parser("validate", help="check a space or diagram document"))
    common(sub.add_parser("emtfy", help="apply the compatibilization reflector"))
    p = sub.add_parser("functor", help="apply a named functor to a space")
    p.add_argument("--name", required=True,
                   help="emt|gamma|gammabar|mc|geo|trunc:<v>|disc:<v|inf>|T")
    common(p)
    common(sub.add_parser("limit", help="limit of a diagram"))
    common(sub.add_parser("colimit", help="colimit of a diagram"))
    p = sub.add_parser("verify", help="verify universal properties of a diagram")
    p.add_argument("--side", choices=("limit", "colimit", "both"), default="both")
    p.add_argument("--probe-max", dest="probe_max", type=int, default=2,
                   help="largest probe space used for verification (default 2)")
    common(p)
    p = sub.add_parser("adjunction", help="check a named adjunction")
    p.add_argument("--name", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=10)
    common(p)
    p = sub.add_parser("theoremb", help="run the eight-way characterization checker")
    p.add_argument("--relaxed", action="store_true", help="drop the Hausdorff requirement")
    common(p)
    p = sub.add_parser("generate", help="emit a seeded random space")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=3)
    common(p)
    p = sub.add_parser("suite", help="run the acceptance battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--table", action="store_true", help="render a plain-text table")
    common(p)
    return parser


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        caps_from_env()
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "emtfy":
            return _cmd_functor(args, name="emt")
        if args.command == "functor":
            return _cmd_functor(args)
        if args.command == "limit":
            return _cmd_limit(args, limit)
        if args.command == "colimit":
            return _cmd_limit(args, colimit)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "adjunction":
            return _cmd_adjunction(args)
        if args.command == "theoremb":
            return _cmd_theoremb(args)
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "suite":
            return _cmd_suite(args)
        return EXIT_USAGE
    except (ParseError, DomainError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CapExceeded as exc:
        sys.stderr.write(f"inconclusive: {exc}\n")
        return EXIT_INCONCLUSIVE
    except CoherenceError as exc:
        sys.stderr.write(f"coherence failure: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
