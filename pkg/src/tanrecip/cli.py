"""Command-line harness.

    tanrecip mulpoly 7 [--form raw|eisenstein]
    tanrecip rootpoly 5
    tanrecip verify 5 3 [--json]
    tanrecip sweep --pmax 101 [--format csv|json] [--out FILE] [--jobs N]

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from typing import Sequence

from .cycloroots import product_identity_check, root_poly
from .errors import InconsistencyError, InvalidInputError
from .exactmath import Poly, product_over_roots
from .reciprocity import ReciprocityReport, sweep, verify_pair
from .tanmul import eisenstein_form, tan_multiple

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INVALID = 0, 1, 2

FIELDS = (
    "p", "q", "P", "Q", "s", "d",
    "sym_tangent", "sym_euler", "sym_gauss", "sigma", "reciprocity_ok",
)
_INT_FIELDS = FIELDS[:-1]


def format_poly(f: Poly, var: str) -> str:
    """Highest degree first with explicit signs, e.g. ``-t^3 + 3t``."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + (f"^{k}" if k > 1 else "")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def poly_record(f: Poly, var: str) -> dict:
    """Machine form: coefficients low-to-high as decimal strings."""
    return {"var": var, "coeffs": [str(c) for c in f.coeffs]}


def report_to_record(r: ReciprocityReport) -> dict:
    """Flat record; every integer becomes an exact decimal string."""
    rec = asdict(r)
    out = {k: str(rec[k]) for k in _INT_FIELDS}
    out["reciprocity_ok"] = bool(rec["reciprocity_ok"])
    return out


def record_to_report(rec: dict) -> ReciprocityReport:
    ok = rec["reciprocity_ok"]
    if isinstance(ok, str):
        ok = {"true": True, "false": False}[ok.lower()]
    return ReciprocityReport(**{k: int(rec[k]) for k in _INT_FIELDS}, reciprocity_ok=ok)


def records_to_csv(reports: Sequence[ReciprocityReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in reports:
        rec = report_to_record(r)
        writer.writerow([rec[k] if k != "reciprocity_ok" else str(rec[k]).lower() for k in FIELDS])
    return buf.getvalue()


def records_from_csv(text: str) -> list[ReciprocityReport]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != FIELDS:
        raise InvalidInputError(f"unexpected CSV header {reader.fieldnames}")
    return [record_to_report(row) for row in reader]


def records_to_jsonl(reports: Sequence[ReciprocityReport]) -> str:
    return "".join(json.dumps(report_to_record(r), separators=(",", ":")) + "\n" for r in reports)


def records_from_jsonl(text: str) -> list[ReciprocityReport]:
    return [record_to_report(json.loads(line)) for line in text.splitlines() if line.strip()]


def format_report(r: ReciprocityReport) -> str:
    rec = report_to_record(r)
    return " ".join(f"{k}={str(rec[k]).lower() if k == 'reciprocity_ok' else rec[k]}" for k in FIELDS)


def cmd_mulpoly(args) -> int:
    if args.form == "eisenstein":
        f = eisenstein_form(args.q)
        print(f"q={f.q} sigma={f.sigma} phi={format_poly(f.phi, 'u')} psi={format_poly(f.psi, 'u')}")
    else:
        tr = tan_multiple(args.q)
        print(f"N = {format_poly(tr.num, 't')} ; D = {format_poly(tr.den, 't')}")
    return EXIT_OK


def cmd_rootpoly(args) -> int:
    rp = root_poly(args.p)
    half = product_identity_check(args.p)
    full = product_over_roots(rp.F, Poly.monomial(1))
    print(
        f"F = {format_poly(rp.F, 'Z')} ; G = {format_poly(rp.G, 'u')} ; "
        f"product = {half} ; full_product = {full}"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    r = verify_pair(args.p, args.q)
    if args.json:
        sys.stdout.write(records_to_jsonl([r]))
    else:
        print(format_report(r))
    return EXIT_OK if r.passed else EXIT_CHECK_FAILED


def cmd_sweep(args) -> int:
    if args.pmax < 5:
        raise InvalidInputError(f"--pmax must be >= 5, got {args.pmax}")
    reports = sweep(args.pmax, workers=args.jobs)
    text = records_to_csv(reports) if args.format == "csv" else records_to_jsonl(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tanrecip", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mulpoly", help="tan(qx) as a rational function of tan x")
    p.add_argument("q", type=int)
    p.add_argument("--form", choices=("raw", "eisenstein"), default="raw")
    p.set_defaults(func=cmd_mulpoly)

    p = sub.add_parser("rootpoly", help="polynomials with roots tan(2 pi rho/p) and their squares")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_rootpoly)

    p = sub.add_parser("verify", help="compute (q/p) three ways and check reciprocity")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify every pair of odd primes up to --pmax")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InconsistencyError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
