"""Command-line front end.

Exit codes: 0 success, 1 verification disagreement, 2 usage or
precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .enumeration import SIZE_CAPS, check_size_cap, path_words
from .families import sequence
from .model import Family, FamilySpec, Method, SequenceResult
from .verify import VerificationReport, verify

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2
DEFAULT_ORDER = 10

METHODS = {
    "closed": Method.CLOSED_FORM,
    "recurrence": Method.RECURRENCE,
    "oracle": Method.ORACLE,
}


@dataclass(frozen=True)
class OutputRecord:
    spec: FamilySpec
    method: Method
    coefficients: tuple[int, ...]
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_result(cls, result: SequenceResult) -> OutputRecord:
        return cls(result.spec, result.method, result.coefficients, dict(result.metadata))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def to_json(self) -> dict:
        return {
            "spec": {"family": self.spec.family.value, "m": self.spec.m, "n": self.spec.n},
            "method": self.method.value,
            "order": self.order,
            "coefficients": [str(c) for c in self.coefficients],
            "metadata": self.metadata,
        }

    def csv_row(self) -> list[str]:
        s = self.spec
        return [s.family.value, str(s.m), str(s.n), self.method.value] + [str(c) for c in self.coefficients]


def parse_range(text: str) -> list[int]:
    """``"a..b"`` (inclusive, empty when b < a), ``"a,b,c"`` or ``"a"``."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        elif text == "":
            values = []
        else:
            values = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected a..b, a,b,c or a") from None
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"range {text!r} contains a negative value")
    return values


def parse_family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_families(text: str) -> list[Family]:
    return [parse_family(t) for t in text.split(",") if t.strip()]


def parse_fault(text: str) -> tuple[Family, int, int, int]:
    try:
        fam, m, n, size = text.split(":")
        return parse_family(fam), int(m), int(n), int(size)
    except ValueError:
        raise argparse.ArgumentTypeError("fault must look like FAMILY:M:N:SIZE") from None


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def format_records(records: Sequence[OutputRecord], fmt: str, single: bool = False) -> str:
    if fmt == "json":
        payload = records[0].to_json() if single else [r.to_json() for r in records]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        width = max((len(r.coefficients) for r in records), default=0)
        writer.writerow(["family", "m", "n", "method"] + [f"c{j}" for j in range(width)])
        for r in records:
            writer.writerow(r.csv_row())
        return buf.getvalue()
    return "".join(" ".join(str(c) for c in r.coefficients) + "\n" for r in records)


def format_report(report: VerificationReport, fmt: str) -> str:
    failure = report.first_failure()
    if fmt == "json":
        cells = [{
            "spec": {"family": c.spec.family.value, "m": c.spec.m, "n": c.spec.n},
            "size": c.size,
            "closed_form": None if c.closed_form is None else str(c.closed_form),
            "recurrence": str(c.recurrence),
            "oracle": str(c.oracle),
            "agree": c.agree,
        } for c in report.cells]
        return json.dumps({"cells": cells, "overall": report.overall}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "m", "n", "size", "closed_form", "recurrence", "oracle", "agree"])
        for c in report.cells:
            writer.writerow([c.spec.family.value, c.spec.m, c.spec.n, c.size,
                             "" if c.closed_form is None else c.closed_form,
                             c.recurrence, c.oracle, str(c.agree).lower()])
        return buf.getvalue()
    lines = [f"{'family':<15} {'m':>2} {'n':>2} {'size':>4} {'closed_form':>14} "
             f"{'recurrence':>14} {'oracle':>14}  agree"]
    for c in report.cells:
        cf = "-" if c.closed_form is None else str(c.closed_form)
        mark = "yes" if c.agree else "NO"
        if c is failure:
            mark += "  <-- first failure"
        lines.append(f"{c.spec.family.value:<15} {c.spec.m:>2} {c.spec.n:>2} {c.size:>4} "
                     f"{cf:>14} {c.recurrence:>14} {c.oracle:>14}  {mark}")
    lines.append(f"overall: {str(report.overall).lower()} ({len(report.cells)} cells)")
    return "\n".join(lines) + "\n"


def _effective_order(args, family: Family, method: Method) -> int:
    if args.order is not None:
        return args.order
    # the oracle's default must stay inside the enumeration cap
    if method is Method.ORACLE and not args.force:
        return min(DEFAULT_ORDER, SIZE_CAPS[family])
    return DEFAULT_ORDER


def cmd_series(args) -> tuple[str, int]:
    method = METHODS[args.method]
    spec = FamilySpec(args.family, args.m, args.n)
    result = sequence(spec, _effective_order(args, args.family, method), method, force=args.force)
    return format_records([OutputRecord.from_result(result)], args.format, single=True), EXIT_OK


def cmd_enumerate(args) -> tuple[str, int]:
    check_size_cap(args.family, args.size, args.force)
    words = list(path_words(args.family, args.size, args.force))
    if args.list:
        if args.format == "json":
            return json.dumps(words, indent=2) + "\n", EXIT_OK
        return "".join(w + "\n" for w in words), EXIT_OK
    if args.format == "json":
        return json.dumps({"family": args.family.value, "size": args.size,
                           "count": str(len(words))}) + "\n", EXIT_OK
    return f"{len(words)}\n", EXIT_OK


def cmd_table(args) -> tuple[str, int]:
    method = METHODS[args.method]
    records = []
    for m in args.m:
        for n in args.n:
            spec = FamilySpec(args.family, m, n)
            result = sequence(spec, _effective_order(args, args.family, method), method, force=args.force)
            records.append(OutputRecord.from_result(result))
    if not records:
        return ("[]\n" if args.format == "json" else ""), EXIT_OK
    return format_records(records, args.format), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    report = verify(args.families, args.m, args.n, args.max_size,
                    force=args.force, fault=args.inject_fault)
    failure = report.first_failure()
    if failure is not None:
        print(f"verification failed at {failure.describe()}", file=sys.stderr)
        return format_report(report, args.format), EXIT_DISAGREE
    return format_report(report, args.format), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorpaths",
        description="Colored Catalan, Schroder and Motzkin path counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--force", action="store_true", help="lift enumeration size caps")
    common.add_argument("--out", help="also write the output to this file")

    fam_names = ", ".join(f.value for f in Family)

    p = sub.add_parser("series", parents=[common], help="one coefficient sequence")
    p.add_argument("--family", type=parse_family, required=True, help=fam_names)
    p.add_argument("-m", type=nonneg_int, default=1, help="colors on the down step")
    p.add_argument("-n", type=nonneg_int, default=1, help="colors on the level step")
    p.add_argument("--order", type=nonneg_int, default=None,
                   help=f"largest size to emit (default {DEFAULT_ORDER})")
    p.add_argument("--method", choices=tuple(METHODS), default="recurrence")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("enumerate", parents=[common], help="list or count uncolored paths")
    p.add_argument("--family", type=parse_family, required=True, help=fam_names)
    p.add_argument("--size", type=nonneg_int, required=True)
    p.add_argument("--list", action="store_true", help="print one step string per line")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", parents=[common], help="sequences over a grid of m, n")
    p.add_argument("--family", type=parse_family, required=True, help=fam_names)
    p.add_argument("-m", type=parse_range, default=[1], help="range like 1..3")
    p.add_argument("-n", type=parse_range, default=[1], help="range like 1..3")
    p.add_argument("--order", type=nonneg_int, default=None)
    p.add_argument("--method", choices=tuple(METHODS), default="recurrence")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="cross-check all three methods")
    p.add_argument("--families", type=parse_families, default=list(Family),
                   help=f"comma-separated subset of: {fam_names}")
    p.add_argument("-m", type=parse_range, default=[1, 2, 3])
    p.add_argument("-n", type=parse_range, default=[1, 2, 3])
    p.add_argument("--max-size", type=nonneg_int, default=8)
    p.add_argument("--inject-fault", type=parse_fault, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
