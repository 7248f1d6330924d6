"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 invalid involution, 4 internal
cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .admissible import verify_table
from .analysis import (AnalysisReport, analyze, enumerate_reports, parse_instance,
                       render_text, thread_count)
from .errors import InternalInconsistency, InvalidInvolution, ParseError
from .fixtures import FIXTURES
from .roots import RANK_RANGE

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVOLUTION = 3
EXIT_INTERNAL = 4


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(data: object) -> None:
    _emit(json.dumps(data, sort_keys=True, indent=2))


def _cmd_analyze(args: argparse.Namespace) -> int:
    if args.fixture is not None:
        document = json.dumps({"fixture": args.fixture})
    else:
        if args.file is None:
            raise ParseError("analyze: provide an instance file or --fixture NAME")
        if args.file == "-":
            document = sys.stdin.read()
        else:
            try:
                with open(args.file, "r", encoding="utf-8") as handle:
                    document = handle.read()
            except OSError as exc:
                raise ParseError(f"cannot read {args.file}: {exc}") from None
    report = analyze(parse_instance(document))
    _emit(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    kind = args.type.upper()
    if kind not in RANK_RANGE:
        raise ParseError(f"unknown Cartan type {args.type!r}")
    reports, summary = enumerate_reports(kind, args.rank, bound=args.bound,
                                         threads=thread_count())
    if args.format == "json":
        _emit_json({"reports": [r.data for r in reports], "summary": summary})
    else:
        for report in reports:
            instance = report["instance"]
            crossed = ";".join(",".join(map(str, ix)) for ix in instance["crossed"])
            _emit(f"crossed [{crossed}]  levi={report['levi_order']}"
                  f"  contact={report['contact_order']}"
                  f"  fundamental={str(report['fundamental']).lower()}"
                  f"  minimal_type={str(report['minimal_type']).lower()}")
        _emit(f"instances: {summary['instances']}")
        _emit("fundamental & weakly nondegenerate => levi order <= 3: "
              + str(summary["fundamental_weakly_nondegenerate_implies_order_le_3"]).lower())
        _emit("minimal type => finite levi order <= 2: "
              + str(summary["minimal_type_implies_order_le_2"]).lower())
    if summary["violations"]:
        raise InternalInconsistency(f"{len(summary['violations'])} theorem violations")
    return EXIT_OK


def _cmd_qbeta(args: argparse.Namespace) -> int:
    kind = args.type.upper()
    if kind not in RANK_RANGE:
        raise ParseError(f"unknown Cartan type {args.type!r}")
    report = verify_table([(kind, args.rank)])
    if args.format == "json":
        _emit_json({
            "entries": [
                {
                    "type": e.kind,
                    "rank": e.rank,
                    "length_class": e.length_class,
                    "expected": e.expected,
                    "got": e.got,
                    "witness": None if e.witness is None
                    else [str(r) for r in e.witness.sequence],
                }
                for e in report.entries
            ],
            "ok": report.ok,
        })
    else:
        for e in report.entries:
            status = "ok" if e.expected == e.got else "MISMATCH"
            witness = "" if e.witness is None else \
                "  witness " + ", ".join(str(r) for r in e.witness.sequence)
            _emit(f"{e.kind}{e.rank} {e.length_class}: q = {e.got} "
                  f"(expected {e.expected}, {status}){witness}")
    if not report.ok:
        raise InternalInconsistency("q(beta) classification mismatch")
    return EXIT_OK


def _cmd_lee(args: argparse.Namespace) -> int:
    report = analyze(parse_instance({"lee": {"k": args.k}}))
    _emit(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK


def _cmd_fixtures(args: argparse.Namespace) -> int:
    names = sorted(FIXTURES)
    if args.format == "json":
        _emit_json({name: FIXTURES[name] for name in names})
    else:
        for name in names:
            doc = FIXTURES[name]
            if "lee" in doc:
                _emit(f"{name}: lee extension, k = {doc['lee']['k']}")
            else:
                comps = "+".join(f"{k}{r}" for k, r in doc["components"])
                crossed = ";".join(",".join(map(str, ix)) for ix in doc["crossed"])
                _emit(f"{name}: {comps}, crossed [{crossed}]")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crorder",
        description="Nondegeneracy orders of parabolic CR algebras, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one instance document")
    p_analyze.add_argument("file", nargs="?", help="instance JSON file ('-' for stdin)")
    p_analyze.add_argument("--fixture", help="use a named fixture instead of a file")
    p_analyze.add_argument("--format", choices=("json", "text"), default="text")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_enum = sub.add_parser("enumerate",
                            help="sweep all crossings and signed-permutation conjugations")
    p_enum.add_argument("--type", required=True)
    p_enum.add_argument("--rank", type=int, required=True)
    p_enum.add_argument("--bound", type=int, default=None,
                        help="cap on the number of conjugations")
    p_enum.add_argument("--format", choices=("json", "text"), default="text")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_qbeta = sub.add_parser("qbeta", help="verify the q(beta) classification")
    p_qbeta.add_argument("--type", required=True)
    p_qbeta.add_argument("--rank", type=int, required=True)
    p_qbeta.add_argument("--format", choices=("json", "text"), default="text")
    p_qbeta.set_defaults(func=_cmd_qbeta)

    p_lee = sub.add_parser("lee", help="analyze the rank-one extension for a weight")
    p_lee.add_argument("--k", type=int, required=True)
    p_lee.add_argument("--format", choices=("json", "text"), default="text")
    p_lee.set_defaults(func=_cmd_lee)

    p_fix = sub.add_parser("fixtures", help="list the named fixtures")
    p_fix.add_argument("--list", action="store_true", default=True)
    p_fix.add_argument("--format", choices=("json", "text"), default="text")
    p_fix.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidInvolution as exc:
        print(f"error: invalid involution: {exc}", file=sys.stderr)
        return EXIT_INVOLUTION
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
