"""Command-line entry point: ``semigap analyze | family | sweep``.

Exit codes: 0 success, 1 usage, 2 invalid input, 3 internal invariant
violation, 4 sweep counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import analyze
from .errors import InternalInvariantViolation, InvalidInput, SweepFailure
from .oracle import theorem_sweep
from .report import SemigroupReport, render_diagram, render_text
from .special import SPORADIC_AML, family_aml, family_ml
from .triple import pseudo_symmetric_triple

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INTERNAL, EXIT_SWEEP = 0, 1, 2, 3, 4
WINDOW_ENV = "SEMIGAP_SERIES_WINDOW"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for invalid input here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_generators(raw: list[str]) -> list[int]:
    out = []
    for token in raw:
        try:
            out.append(int(token))
        except ValueError:
            raise InvalidInput(f"not an integer: {token!r}") from None
    return out


def _series_window(flag: int | None) -> int | None:
    if flag is not None:
        return flag
    env = os.environ.get(WINDOW_ENV)
    if env is None or env == "":
        return None
    try:
        value = int(env)
    except ValueError:
        raise UsageError(f"{WINDOW_ENV} must be a nonnegative integer, got {env!r}") from None
    if value < 0:
        raise UsageError(f"{WINDOW_ENV} must be a nonnegative integer, got {env!r}")
    return value


def _warn_claims(report: SemigroupReport) -> None:
    for cid in report.failed_claims:
        print(f"note: recorded check {cid} does not hold for this tuple", file=sys.stderr)


def cmd_analyze(args) -> int:
    values = _parse_generators(args.generators)
    window = _series_window(args.series_window)
    report = SemigroupReport.from_analysis(analyze(values, series_window=window))
    if args.json:
        print(report.to_json())
    else:
        print(render_text(report))
    if args.diagram:
        print(render_diagram(report))
    _warn_claims(report)
    return EXIT_OK


def cmd_family(args) -> int:
    if args.family == "pseudo3":
        member = pseudo_symmetric_triple(args.a, args.b, args.c)
    elif args.family == "ml":
        member = family_ml(args.m, args.k)
    else:
        if (args.k is None) == (args.sporadic is None):
            raise UsageError("aml needs exactly one of --k or --sporadic")
        member = family_aml(args.t, k=args.k, sporadic=args.sporadic)
    report = SemigroupReport.from_analysis(analyze(member.generators))
    if args.json:
        doc = {
            "family": args.family,
            "parameters": member.parameters,
            "generators": list(member.generators.values),
            "predicted": member.predicted,
            "report": report.to_dict(),
        }
        print(json.dumps(doc, indent=2))
    else:
        params = ", ".join(f"{k}={v}" for k, v in member.parameters.items())
        print(f"{args.family}({params}) -> {tuple(member.generators.values)}")
        print("predicted: " + ", ".join(f"{k}={v}" for k, v in member.predicted.items()))
        print(render_text(report))
    _warn_claims(report)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.max_gen < 1:
        raise UsageError("--max-gen must be positive")
    if any(m < 2 for m in args.dim):
        raise UsageError("--dim values must be at least 2")
    try:
        summary = theorem_sweep(args.dim, args.max_gen, parallel=args.parallel)
    except SweepFailure as exc:
        print(f"counterexample #{exc.index}: {tuple(exc.generators)}", file=sys.stderr)
        print(f"failed check: {exc.check_id} {exc.detail}".rstrip(), file=sys.stderr)
        return EXIT_SWEEP
    if args.json:
        print(json.dumps(summary.as_dict(), indent=2))
        return EXIT_OK
    dims = ", ".join(f"m={m}: {n}" for m, n in sorted(summary.per_dim.items())) or "none"
    print(f"tuples: {summary.tuples} ({dims}), symmetric: {summary.symmetric}")
    width = max((len(k) for k in summary.passes), default=0)
    for cid, n in sorted(summary.passes.items()):
        print(f"  {cid:<{width}}  {n}")
    print(f"failures: 0, wall time {summary.elapsed:.2f}s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semigap", description="Gap classification for numerical semigroups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="analyze one minimal generating tuple")
    a.add_argument("generators", nargs="+", help="generators (any order)")
    a.add_argument("--json", action="store_true", help="emit the report as JSON")
    a.add_argument("--diagram", action="store_true", help="print the ASCII gap diagram")
    a.add_argument("--series-window", type=int, metavar="N",
                   help=f"Hilbert series coefficients to check (overrides ${WINDOW_ENV})")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("family", help="generate and verify a family member")
    f.add_argument("--json", action="store_true")
    fam = f.add_subparsers(dest="family", required=True, parser_class=_Parser)
    p3 = fam.add_parser("pseudo3", help="pseudo-symmetric triple from a, b, c")
    for name in ("a", "b", "c"):
        p3.add_argument(f"--{name}", type=int, required=True)
    ml = fam.add_parser("ml", help="maximal-length tuple (m, mk+1, ..., mk+m-1)")
    ml.add_argument("--m", type=int, required=True)
    ml.add_argument("--k", type=int, required=True)
    aml = fam.add_parser("aml", help="almost-maximal-length tuple of type t")
    aml.add_argument("--t", type=int, required=True)
    aml.add_argument("--k", type=int)
    aml.add_argument("--sporadic", choices=sorted(SPORADIC_AML))
    f.set_defaults(func=cmd_family)

    s = sub.add_parser("sweep", help="exhaustive oracle and theorem sweep")
    s.add_argument("--dim", type=int, nargs="+", required=True, metavar="M")
    s.add_argument("--max-gen", type=int, required=True, metavar="D")
    s.add_argument("--parallel", type=int, metavar="K")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"semigap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidInput as exc:
        print(f"semigap: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalInvariantViolation as exc:
        print(f"semigap: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
