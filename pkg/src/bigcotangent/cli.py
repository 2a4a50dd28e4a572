"""Command-line front end.

Exit codes: 0 success, 1 parse/usage/IO failure, 2 domain error,
3 table mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import families, geography, tables
from .chern_core import DomainError, SurfaceRecord, evaluate_criterion
from .documents import DocumentError, format_rational, parse_document

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3

CSV_HEADER = ("family", "params", "c1_sq", "c2_Y", "c2_orb", "s2_Y", "s2_orb", "criterion", "verdict")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors share the parse-failure exit code
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _approx(x) -> str:
    return f"{format_rational(x)} (~{float(x):.6g})"


def report(record: SurfaceRecord) -> dict:
    """Criterion verdict plus geography for ``record``, rationals as ``p/q``."""
    v = evaluate_criterion(record)
    out = {
        "name": record.name,
        "c1_sq": format_rational(record.c1_sq),
        "c2_Y": format_rational(record.c2),
        "c2_orb": format_rational(record.c2_orb),
        "singularities": {str(s): c for s, c in record.profile.items()},
        "s2_Y": format_rational(v.s2_Y),
        "s2_orb": format_rational(v.s2_orb),
        "criterion": format_rational(v.criterion),
        "verdict": v.verdict.value,
        "growth_coeff": None if v.growth_coeff is None else format_rational(v.growth_coeff),
        "geography": None,
    }
    if record.c1_sq > 0:
        g = geography.geography_report(record)
        out["geography"] = {
            "bmy_ok": g.bmy_ok,
            "chern_35_ok": g.chern_35_ok,
            "noether_class": g.noether_class.value,
            "ratio_sum": format_rational(g.ratio_sum),
            "c2_ratio": format_rational(g.c2_ratio),
        }
    return out


def _print_report(record: SurfaceRecord, as_json: bool) -> None:
    data = report(record)
    if as_json:
        print(json.dumps(data, indent=2))
        return
    v = evaluate_criterion(record)
    sings = ", ".join(f"{s} x {c}" for s, c in record.profile.items()) or "none"
    print(f"surface:        {record.name}")
    print(f"c1^2:           {data['c1_sq']}")
    print(f"c2(Y):          {data['c2_Y']}")
    print(f"c2(orbifold):   {data['c2_orb']}")
    print(f"singularities:  {sings}")
    print(f"s2(Y):          {_approx(v.s2_Y)}")
    print(f"s2(orbifold):   {_approx(v.s2_orb)}")
    print(f"criterion:      {_approx(v.criterion)}")
    print(f"verdict:        {v.verdict.value}")
    if v.growth_coeff is not None:
        print(f"growth coeff:   {_approx(v.growth_coeff)}  (h^0(S^m) >= coeff * m^3 + O(m^2))")
    g = data["geography"]
    if g is None:
        print("geography:      n/a (c1^2 <= 0)")
    else:
        print(f"orbifold BMY:   {'ok' if g['bmy_ok'] else 'VIOLATED'}")
        print(f"c1^2 > 3/5 c2:  {g['chern_35_ok']}")
        print(f"Noether line:   {g['noether_class']}")
        print(f"(c2(Y)+c2(orb))/c1^2: {g['ratio_sum']}")
        print(f"c2(Y)/c1^2:     {g['c2_ratio']}")


# -- argument helpers ------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """Inclusive integer ranges: ``"13..19"``, ``"5"``, ``"1,3,8..10"``."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..")
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(part))
        except ValueError:
            raise UsageError(f"bad integer range {text!r}") from None
    return values


def parse_degrees(text: str) -> list[int]:
    """Branch degrees: ``"5,5,5"`` or with repetition ``"1x15"``, ``"5x2,3"``."""
    degrees: list[int] = []
    for part in text.split(","):
        base, _, times = part.strip().partition("x")
        try:
            degrees.extend([int(base)] * (int(times) if times else 1))
        except ValueError:
            raise UsageError(f"bad degree list {text!r}") from None
    return degrees


# -- commands --------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    record = parse_document(text)
    _print_report(record, args.json)
    return EXIT_OK


def _family_record(args: argparse.Namespace) -> SurfaceRecord:
    name = args.family
    if name == "hypersurface-ak":
        return families.make_hypersurface_ak(families.HypersurfaceAk(args.d, args.k, args.ell))
    if name == "lines":
        return families.make_line_cover(args.v, args.n)
    if name == "cyclic":
        degrees = parse_degrees(args.degrees) if args.degrees else None
        return families.make_cyclic_cover(families.CyclicCoverSpec(args.d, args.n, degrees))
    return families.make_branched_cover_nd(parse_degrees(args.degrees))


def cmd_family(args: argparse.Namespace) -> int:
    _print_report(_family_record(args), args.json)
    return EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    if args.table not in tables.TABLES:
        known = ", ".join(sorted(tables.TABLES))
        raise UsageError(f"unknown table {args.table!r} (known: {known})")
    diff = tables.check_table(args.table)
    exp = diff.expectation
    print(f"table {exp.identifier}: {exp.title}")
    for note in exp.notes:
        print(f"  note: {note}")
    print(f"  cells expected: {len(exp.cells)}, computed: {len(diff.computed)}")
    if diff.ok:
        print("PASS")
        return EXIT_OK
    for key, want, got in diff.mismatches:
        print(f"  MISMATCH {key}: expected {want!r}, computed {got!r}")
    print("FAIL")
    return EXIT_MISMATCH


def write_sweep_csv(result: geography.SweepResult, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in result.rows:
        writer.writerow(
            [
                row.family.value,
                ";".join(f"{k}={v}" for k, v in row.params),
                *(format_rational(x) for x in (row.c1_sq, row.c2_Y, row.c2_orb, row.s2_Y, row.s2_orb, row.criterion)),
                row.verdict,
            ]
        )
    stream.write(f"# skipped={result.skipped}\n")


def cmd_sweep(args: argparse.Namespace) -> int:
    family = geography.Family(args.family.upper())
    ranges = {}
    for name in geography.FAMILY_PARAMS[family]:
        text = getattr(args, name)
        if name == "ell" and text in geography.ELL_RULES:
            ranges[name] = text
        else:
            ranges[name] = parse_range(text)
    result = geography.sweep(family, ranges)
    buf = io.StringIO()
    write_sweep_csv(result, buf)
    if args.output in (None, "-"):
        sys.stdout.write(buf.getvalue())
    else:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
        print(f"wrote {len(result.rows)} rows to {args.output} (skipped {result.skipped})", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bigcotangent", description="Bigness criterion for canonical surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="evaluate a JSON surface document")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", help="evaluate a member of a built-in family")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    f = fam.add_parser("hypersurface-ak", help="degree-d surface with ell points A_k")
    f.add_argument("--d", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--ell", type=int, required=True)
    f = fam.add_parser("lines", help="n-cyclic cover along nv general lines")
    f.add_argument("--v", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f = fam.add_parser("cyclic", help="n-cyclic cover along a degree-d curve (lines by default)")
    f.add_argument("--d", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--degrees", help="branch component degrees, e.g. 2,2,2 or 1x6")
    f = fam.add_parser("branch", help="degree-d cover with n = d along the given curves")
    f.add_argument("--degrees", required=True, help="e.g. 5,5,5 or 1x15")
    for f in fam.choices.values():
        f.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("tables", help="recompute a published table and diff it")
    p.add_argument("table", help="corollary-nodes | lines-exceptions")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("sweep", help="write a CSV grid sweep over a family")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    for name, family in (("ak", "AK"), ("cyclic", "CYCLIC"), ("lines", "LINES"), ("branch", "BRANCH")):
        f = fam.add_parser(name)
        for param in geography.FAMILY_PARAMS[geography.Family(family)]:
            hint = " or chmutov|segre|least" if param == "ell" else ""
            f.add_argument(f"--{param}", required=True, help=f"inclusive range like 13..19{hint}")
        f.add_argument("-o", "--output", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code in (EXIT_OK, EXIT_PARSE) else EXIT_PARSE
    try:
        return args.func(args)
    except (DocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
