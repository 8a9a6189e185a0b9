"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 not positively correlated,
4 cause coincides with a or b (strict mode), 5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .common_cause import (
    Certificate,
    Mode,
    RccpReport,
    covariance,
    find_common_cause,
    verify_rccp,
)
from .errors import (
    CommonCauseError,
    DegenerateDistinctness,
    InternalInvariantViolation,
    NotPositivelyCorrelated,
)
from .events import Event, format_event, parse_event
from .finite import DEFAULT_DENOMINATOR, Classification, classify, parse_algebra, scan
from .horizontal_sum import HSCertificate, HSLogic, parse_hs

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_CORRELATED = 3
EXIT_DEGENERATE = 4
EXIT_INTERNAL = 5


def _event_arg(text: str) -> Event:
    try:
        return parse_event(text)
    except CommonCauseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _hs_arg(text: str):
    try:
        return parse_hs(text)
    except CommonCauseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commoncause",
        description="Exact common-cause constructions on interval Boolean algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cov", help="covariance p(a&b) - p(a)p(b)")
    p.add_argument("-a", required=True, type=_event_arg)
    p.add_argument("-b", required=True, type=_event_arg)

    p = sub.add_parser("cause", help="construct and certify a common cause of a, b")
    p.add_argument("-a", required=True, type=_event_arg)
    p.add_argument("-b", required=True, type=_event_arg)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.LENIENT.value)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check the four screening-off conditions for a, b, c")
    p.add_argument("-a", required=True, type=_event_arg)
    p.add_argument("-b", required=True, type=_event_arg)
    p.add_argument("-c", required=True, type=_event_arg)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("finite-check", help="classify a finite algebra given by atom weights")
    p.add_argument("spec_file", type=Path)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("finite-scan", help="classify random finite algebras")
    p.add_argument("-n", type=int, required=True, dest="atoms")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--denominator", type=int, default=DEFAULT_DENOMINATOR)

    p = sub.add_parser("hsum-cause", help="common cause inside a horizontal sum")
    p.add_argument("-k", type=int, required=True, dest="blocks")
    p.add_argument("-x", required=True, type=_hs_arg)
    p.add_argument("-y", required=True, type=_hs_arg)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.LENIENT.value)
    p.add_argument("--json", action="store_true")
    return parser


def _report_lines(r: RccpReport) -> list[str]:
    return [
        f"p(a|c) = {r.p_a_given_c}",
        f"p(b|c) = {r.p_b_given_c}",
        f"p(ab|c) = {r.p_ab_given_c}",
        f"p(a|c') = {r.p_a_given_cprime}",
        f"p(b|c') = {r.p_b_given_cprime}",
        f"p(ab|c') = {r.p_ab_given_cprime}",
    ] + [f"{name} = {str(flag).lower()}" for name, flag in r.flags().items()]


def _certificate_lines(cert: Certificate) -> list[str]:
    return [
        f"a = {format_event(cert.a)}",
        f"b = {format_event(cert.b)}",
        f"cov = {cert.covariance}",
        f"v = {cert.target_measure}",
        f"c = {format_event(cert.c)}",
        *_report_lines(cert.report),
        f"distinct = {str(cert.distinct).lower()}",
        f"mode = {cert.mode.value}",
    ]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _verify_json(a: Event, b: Event, c: Event, r: RccpReport) -> dict:
    out = {"a": format_event(a), "b": format_event(b), "c": format_event(c)}
    for name in (
        "p_a_given_c", "p_b_given_c", "p_ab_given_c",
        "p_a_given_cprime", "p_b_given_cprime", "p_ab_given_cprime",
    ):
        out[name] = str(getattr(r, name))
    out["rccp"] = r.flags()
    return out


def _classification_json(weights, cl: Classification) -> dict:
    return {
        "weights": [str(w) for w in weights],
        "verdict": cl.verdict.value,
        "witnesses": [
            {
                "a": sorted(w.a.members),
                "b": sorted(w.b.members),
                "cause": None if w.cause is None else sorted(w.cause.members),
            }
            for w in cl.witnesses
        ],
    }


def _run(args) -> str:
    if args.command == "cov":
        return str(covariance(args.a, args.b))
    if args.command == "cause":
        cert = find_common_cause(args.a, args.b, args.mode)
        return _dump(cert.to_json()) if args.json else "\n".join(_certificate_lines(cert))
    if args.command == "verify":
        report = verify_rccp(args.a, args.b, args.c)
        if args.json:
            return _dump(_verify_json(args.a, args.b, args.c, report))
        return "\n".join(_report_lines(report))
    if args.command == "finite-check":
        try:
            text = args.spec_file.read_text()
        except OSError as exc:
            raise _InputError(str(exc))
        alg = parse_algebra(text)
        cl = classify(alg)
        return _dump(_classification_json(alg.atom_weights, cl)) if args.json else cl.format()
    if args.command == "finite-scan":
        return scan(args.atoms, args.samples, args.seed, args.denominator).format()
    if args.command == "hsum-cause":
        try:
            logic = HSLogic(args.blocks)
        except ValueError as exc:
            raise _InputError(str(exc))
        hc: HSCertificate = logic.find_common_cause(
            logic.check(args.x), logic.check(args.y), args.mode
        )
        if args.json:
            return _dump(hc.to_json())
        head = [f"block = {hc.block}", f"x = {hc.x}", f"y = {hc.y}", f"cause = {hc.c}"]
        return "\n".join(head + _certificate_lines(hc.certificate))
    raise AssertionError(args.command)


class _InputError(Exception):
    pass


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = _run(args)
    except NotPositivelyCorrelated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CORRELATED
    except DegenerateDistinctness as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CommonCauseError, _InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
