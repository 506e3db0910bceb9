"""Command line interface: analyze brace documents, verify the built-in
examples, enumerate braces of a given order, and derive Yang-Baxter solutions.

Exit codes: 0 success, 1 failed claim or assertion, 2 parse error,
3 validation error, 4 order bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .braces import CocycleSpec, SkewBrace, brace_from_cocycle, make_brace
from .census import BraceCensus, census
from .classify import brace_report, is_supersoluble, u_p
from .errors import OrderBoundExceeded, ParseError, SkewBraceError
from .fixtures import build, example_names
from .groups import make_group
from .series import (
    derived_ideal,
    left_series,
    lower_central_series,
    right_series,
    socle_series,
    upper_central_series,
)
from .ybe import Solution, retract, retraction_level, solution_from_brace

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_BOUND = 4

BRACE_HEADER = "skewbrace 1"
CENSUS_HEADER = "skewbrace-census 1"

SECTIONS = ("brace", "classify", "series", "ybe")


def _fmt(value) -> str:
    """Render one report value as a stable token string."""
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value) if value else "empty"
    return str(value)


def _table_lines(table: Sequence[Sequence[int]]) -> list[str]:
    return [" ".join(str(v) for v in row) for row in table]


# ---------------------------------------------------------------------------
# document reading and writing


class _Cursor:
    """Line cursor over a document that skips blanks and # comments."""

    def __init__(self, text: str):
        self.rows = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
        self.pos = 0

    def next(self) -> tuple[int, str]:
        while self.pos < len(self.rows):
            lineno, line = self.rows[self.pos]
            self.pos += 1
            if line and not line.startswith("#"):
                return lineno, line
        raise ParseError(len(self.rows) + 1, "unexpected end of document")


def _read_int_row(cursor: _Cursor, n: int, what: str) -> list[int]:
    lineno, line = cursor.next()
    parts = line.split()
    try:
        row = [int(p) for p in parts]
    except ValueError:
        raise ParseError(lineno, f"{what} row contains a non-integer") from None
    if len(row) != n:
        raise ParseError(
            lineno, f"{what} row has {len(row)} entries, expected {n}")
    for v in row:
        if not 0 <= v < n:
            raise ParseError(
                lineno, f"{what} entry {v} outside range 0..{n - 1}")
    return row


def _read_table(cursor: _Cursor, n: int, what: str) -> list[list[int]]:
    return [_read_int_row(cursor, n, what) for _ in range(n)]


def _expect(cursor: _Cursor, keyword: str) -> None:
    lineno, line = cursor.next()
    if line != keyword:
        raise ParseError(lineno, f"expected {keyword!r}, found {line!r}")


def parse_brace_document(text: str) -> SkewBrace:
    """Parse one brace document and return the validated brace."""
    cursor = _Cursor(text)
    lineno, header = cursor.next()
    if header != BRACE_HEADER:
        raise ParseError(lineno, f"expected header {BRACE_HEADER!r}")
    name: Optional[str] = None
    lineno, line = cursor.next()
    while line.split(maxsplit=1)[0] in ("name", "source"):
        key, _, rest = line.partition(" ")
        if key == "name":
            name = rest.strip() or None
        lineno, line = cursor.next()
    parts = line.split()
    if len(parts) != 2 or parts[0] != "order":
        raise ParseError(lineno, f"expected 'order <n>', found {line!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(lineno, f"order {parts[1]!r} is not an integer") from None
    if n < 1:
        raise ParseError(lineno, f"order must be positive, got {n}")
    lineno, line = cursor.next()
    if line == "add":
        add = _read_table(cursor, n, "add")
        _expect(cursor, "mul")
        mul = _read_table(cursor, n, "mul")
        _expect(cursor, "end")
        return make_brace(add, mul, name)
    if line == "cocycle":
        _expect(cursor, "add")
        add = _read_table(cursor, n, "add")
        _expect(cursor, "mult")
        mult = _read_table(cursor, n, "mult")
        _expect(cursor, "lambda")
        acting = _read_table(cursor, n, "lambda")
        _expect(cursor, "delta")
        delta = _read_int_row(cursor, n, "delta")
        _expect(cursor, "end")
        spec = CocycleSpec(
            make_group(add), make_group(mult),
            tuple(tuple(row) for row in acting), tuple(delta))
        return brace_from_cocycle(spec, name)
    raise ParseError(lineno, f"expected 'add' or 'cocycle', found {line!r}")


def write_brace_document(B: SkewBrace, name: Optional[str] = None) -> str:
    """Serialize one brace as an add/mul table document."""
    out = [BRACE_HEADER]
    label = name if name is not None else B.name
    if label:
        out.append(f"name {label}")
    out.append(f"order {B.order}")
    out.append("add")
    out.extend(_table_lines(B.add_group.table))
    out.append("mul")
    out.extend(_table_lines(B.mul_group.table))
    out.append("end")
    return "\n".join(out) + "\n"


def write_census_document(result: BraceCensus) -> str:
    """Serialize a full census, one brace record per entry."""
    out = [CENSUS_HEADER, f"order {result.order}", f"count {len(result.entries)}"]
    for i, entry in enumerate(result.entries):
        out.append(f"entry {i} additive {entry.additive_label} "
                   f"multiplicative {entry.multiplicative_label}")
        out.append("add")
        out.extend(_table_lines(entry.brace.add_group.table))
        out.append("mul")
        out.extend(_table_lines(entry.brace.mul_group.table))
    out.append("end")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# report emission


def _group_section(tag: str, predicates) -> list[str]:
    return [
        f"[{tag}]",
        f"order {predicates.order}",
        f"abelian {_fmt(predicates.abelian)}",
        f"nilpotent {_fmt(predicates.nilpotent)}",
        f"supersoluble {_fmt(predicates.supersoluble)}",
        f"element-orders {_fmt(predicates.element_orders)}",
        f"primes {_fmt(predicates.primes)}",
    ]


def _structured_report(B: SkewBrace, only: Optional[str]) -> str:
    lines: list[str] = []
    if only in (None, "brace", "classify"):
        report = brace_report(B)
    if only in (None, "brace"):
        lines += [
            "[brace]",
            f"name {_fmt(report.name or None)}",
            f"order {report.order}",
            f"trivial {_fmt(report.is_trivial)}",
        ]
        lines += _group_section("additive", report.additive)
        lines += _group_section("multiplicative", report.multiplicative)
    if only in (None, "classify"):
        lines += [
            "[classify]",
            f"supersoluble {_fmt(report.supersoluble)}",
            f"certificate-orders {_fmt(report.certificate_orders)}",
            f"blocking-minimal-orders {_fmt(report.blocking_minimal_orders)}",
            f"centrally-nilpotent {_fmt(report.centrally_nilpotent)}",
            f"left-nilpotent {_fmt(report.left_nilpotent)}",
            f"right-nilpotent {_fmt(report.right_nilpotent)}",
            f"soluble {_fmt(report.soluble)}",
            f"mp-level {_fmt(report.mp_level)}",
            f"fitting-order {report.fitting_order}",
            f"fitting-is-ideal {_fmt(report.fitting_is_ideal)}",
            f"chief-factor-orders {_fmt(report.chief_factor_orders)}",
            f"maximal-subbrace-indices {_fmt(report.maximal_subbrace_indices)}",
            f"ideal-count {report.ideal_count}",
        ]
        for u in report.u_p_by_prime:
            lines.append(
                f"u_p {u.prime} additive-size {len(u.additive)} "
                f"multiplicative-size {len(u.multiplicative)} "
                f"equal {_fmt(u.equal)} ideal {_fmt(u.is_ideal)}")
    if only in (None, "series"):
        lines += [
            "[series]",
            f"socle-series-orders {_fmt(socle_series(B).orders())}",
            f"upper-central-orders {_fmt(upper_central_series(B).orders())}",
            f"lower-central-orders {_fmt(lower_central_series(B).orders())}",
            f"right-series-orders {_fmt(tuple(len(t) for t in right_series(B)))}",
            f"left-series-orders {_fmt(tuple(len(t) for t in left_series(B)))}",
            f"derived-ideal-order {len(derived_ideal(B))}",
        ]
    if only in (None, "ybe"):
        solution = solution_from_brace(B)
        lines += [
            "[ybe]",
            f"size {solution.size}",
            f"braid {_fmt(solution.checks.braid)}",
            f"bijective {_fmt(solution.checks.bijective)}",
            f"nondegenerate {_fmt(solution.checks.nondegenerate)}",
            f"retraction-level {_fmt(retraction_level(solution))}",
            "r1",
            *_table_lines(solution.r1),
            "r2",
            *_table_lines(solution.r2),
        ]
    return "\n".join(lines) + "\n"


def _text_report(B: SkewBrace, only: Optional[str]) -> str:
    lines: list[str] = []
    if only in (None, "brace", "classify"):
        report = brace_report(B)
    if only in (None, "brace"):
        title = report.name or "brace"
        lines.append(f"{title}: order {report.order}"
                     + (" (trivial)" if report.is_trivial else ""))
        for tag, g in (("additive", report.additive),
                       ("multiplicative", report.multiplicative)):
            kind = "abelian" if g.abelian else (
                "nilpotent" if g.nilpotent else (
                    "supersoluble" if g.supersoluble else "insoluble-or-worse"))
            lines.append(f"  {tag} group: order {g.order}, {kind}, "
                         f"primes {_fmt(g.primes)}")
    if only in (None, "classify"):
        if report.supersoluble:
            lines.append(f"supersoluble: yes, chain orders "
                         f"{_fmt(report.certificate_orders)}")
        else:
            lines.append(f"supersoluble: no, minimal ideals of orders "
                         f"{_fmt(report.blocking_minimal_orders)} block every chain")
        lines.append(f"nilpotency: central {_fmt(report.centrally_nilpotent)}, "
                     f"left {_fmt(report.left_nilpotent)}, "
                     f"right {_fmt(report.right_nilpotent)}; "
                     f"soluble {_fmt(report.soluble)}")
        lines.append(f"multipermutation level: {_fmt(report.mp_level)}")
        lines.append(f"fitting ideal: order {report.fitting_order}"
                     + ("" if report.fitting_is_ideal else " (not an ideal)"))
        lines.append(f"chief factors: {_fmt(report.chief_factor_orders)}; "
                     f"ideals: {report.ideal_count}; "
                     f"maximal subbrace indices: "
                     f"{_fmt(report.maximal_subbrace_indices)}")
    if only in (None, "series"):
        lines.append(f"socle series orders: {_fmt(socle_series(B).orders())}")
        lines.append(f"upper central orders: {_fmt(upper_central_series(B).orders())}")
        lines.append(f"lower central orders: {_fmt(lower_central_series(B).orders())}")
        lines.append(f"derived ideal order: {len(derived_ideal(B))}")
    if only in (None, "ybe"):
        solution = solution_from_brace(B)
        ok = "all checks pass" if solution.checks.all_ok() else "CHECKS FAIL"
        lines.append(f"solution on {solution.size} points: {ok}, "
                     f"retraction level {_fmt(retraction_level(solution))}")
        lines.append("r1 rows:")
        lines += ["  " + row for row in _table_lines(solution.r1)]
        lines.append("r2 rows:")
        lines += ["  " + row for row in _table_lines(solution.r2)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        text = fh.read()
    B = parse_brace_document(text)
    emit = _structured_report if args.format == "structured" else _text_report
    sys.stdout.write(emit(B, args.only))
    return EXIT_OK


def _corrupted_rebuild(name: str) -> None:
    """Rebuild one example with two cocycle values swapped; raises on failure."""
    ex = build(name)
    delta = list(ex.spec.delta)
    delta[1], delta[2] = delta[2], delta[1]
    spec = CocycleSpec(ex.spec.additive, ex.spec.multiplicative,
                       ex.spec.acting, tuple(delta))
    brace_from_cocycle(spec, name)


def cmd_verify_paper(args) -> int:
    names = [n for n in example_names()
             if args.fixture is None or n == args.fixture]
    failures = 0
    claims_run = 0
    for name in names:
        if args.corrupt_delta == name:
            try:
                _corrupted_rebuild(name)
            except SkewBraceError as exc:
                print(f"FAIL {name} build: {exc}")
                failures += 1
                continue
            print(f"FAIL {name} build: corrupted table was accepted")
            failures += 1
            continue
        try:
            ex = build(name)
        except SkewBraceError as exc:
            print(f"FAIL {name} build: {exc}")
            failures += 1
            continue
        for claim in ex.claims:
            ok = bool(claim.check(ex))
            claims_run += 1
            status = "pass" if ok else "FAIL"
            print(f"{status} {name} {claim.name}: {claim.description}")
            if not ok:
                failures += 1
    print(f"{claims_run} claims checked, {failures} failures")
    return EXIT_CLAIM_FAILED if failures else EXIT_OK


def cmd_enumerate(args) -> int:
    result = census(args.n)
    print(f"order {result.order}: {len(result.entries)} braces")
    for label, count in sorted(result.count_by_additive().items()):
        print(f"  additive {label}: {count}")
    failures = 0
    if args.check:
        from .braces import check_brace_invariants
        for i, entry in enumerate(result.entries):
            ok = check_brace_invariants(entry.brace)
            solution = solution_from_brace(entry.brace)
            if not (ok and solution.checks.all_ok()):
                print(f"FAIL entry {i} ({entry.additive_label} / "
                      f"{entry.multiplicative_label}): invariant check")
                failures += 1
        print(f"checked {len(result.entries)} entries, {failures} failures")
    if args.square_free:
        for i, entry in enumerate(result.entries):
            if not is_supersoluble(entry.brace).supersoluble:
                print(f"FAIL entry {i} ({entry.additive_label} / "
                      f"{entry.multiplicative_label}): not supersoluble")
                failures += 1
        if not failures:
            print(f"all {len(result.entries)} entries supersoluble")
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            fh.write(write_census_document(result))
        print(f"wrote {args.export}")
    return EXIT_CLAIM_FAILED if failures else EXIT_OK


def cmd_ybe(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        text = fh.read()
    B = parse_brace_document(text)
    solution = solution_from_brace(B)
    sys.stdout.write(_structured_report(B, "ybe"))
    if args.retract:
        level = 0
        current = solution
        while current.size > 1:
            smaller, _ = retract(current)
            if smaller.size == current.size:
                print(f"retraction stalls at size {current.size}")
                break
            current = smaller
            level += 1
            print(f"retract {level}: size {current.size}")
        if current.size == 1:
            print(f"retraction level {level}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewbrace",
        description="Analyze finite skew braces and their Yang-Baxter solutions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="report on one brace document")
    p_analyze.add_argument("path")
    p_analyze.add_argument("--format", choices=("text", "structured"),
                           default="text")
    p_analyze.add_argument("--only", choices=SECTIONS, default=None)
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify-paper",
                              help="run every built-in example claim")
    p_verify.add_argument("--fixture", default=None)
    p_verify.add_argument("--corrupt-delta", default=None,
                          help=argparse.SUPPRESS)
    p_verify.set_defaults(func=cmd_verify_paper)

    p_enum = sub.add_parser("enumerate", help="enumerate all braces of order n")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--check", action="store_true")
    p_enum.add_argument("--square-free", action="store_true")
    p_enum.add_argument("--export", default=None)
    p_enum.set_defaults(func=cmd_enumerate)

    p_ybe = sub.add_parser("ybe", help="derive the solution of one brace")
    p_ybe.add_argument("path")
    p_ybe.add_argument("--retract", action="store_true")
    p_ybe.set_defaults(func=cmd_ybe)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OrderBoundExceeded as exc:
        print(f"order bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SkewBraceError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
