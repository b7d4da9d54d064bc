"""Command-line front end: verify, search, tables, export.

Exit codes: 0 = all requested checks passed, 1 = a check failed or nothing
was found, 2 = usage or input/output error.  Every run produces one report
whose machine-readable (--json) and human-readable renderings contain the
same facts.  The environment variable QCETS_ETS_STEP_LIMIT caps the
trapping-set enumeration effort.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from importlib import resources

from .conditions import (
    check_girth6_etsfree,
    check_girth8_etsfree,
    lower_bound_lifting,
)
from .ets import classify_harmful, enumerate_ets, ets_class_counts
from .matrices import (
    CodeProfile,
    ExponentMatrix,
    MatrixFormatError,
    read_exponent_matrix,
    read_table_fragment,
    write_exponent_matrix,
)
from .search import SearchSpec, search
from .tanner import bfs_girth, lift, to_alist

SCHEMA_VERSION = "1"

TABLE_ROWS = {
    "I": [(4, 13), (5, 21), (6, 31), (7, 49), (8, 57), (9, 85)],
    "II": [(4, 26), (5, 21), (6, 31), (7, 91)],
}
TABLE_GIRTH = {"I": 6, "II": 8}


@dataclass
class RunReport:
    command: str
    arguments: dict
    verdict: str = "pass"
    checker: dict | None = None
    oracle: dict | None = None
    matrices: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    timing_seconds: float = 0.0
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        doc = {
            "schema_version": self.schema_version,
            "command": self.command,
            "arguments": self.arguments,
            "verdict": self.verdict,
            "timing_seconds": round(self.timing_seconds, 3),
        }
        if self.checker is not None:
            doc["checker"] = self.checker
        if self.oracle is not None:
            doc["oracle"] = self.oracle
        if self.matrices:
            doc["matrices"] = self.matrices
        if self.rows:
            doc["rows"] = self.rows
        return doc

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def render_text(self) -> str:
        lines: list[str] = []

        def emit(prefix: str, value) -> None:
            if isinstance(value, dict):
                for key in sorted(value):
                    emit(f"{prefix}{key}.", value[key]) if isinstance(
                        value[key], (dict, list)
                    ) else lines.append(f"{prefix}{key}: {value[key]}")
            elif isinstance(value, list):
                if not value:
                    lines.append(f"{prefix.rstrip('.')}: []")
                for idx, item in enumerate(value):
                    if isinstance(item, (dict, list)):
                        emit(f"{prefix}{idx}.", item)
                    else:
                        lines.append(f"{prefix}{idx}: {item}")
            else:
                lines.append(f"{prefix.rstrip('.')}: {value}")

        emit("", self.to_dict())
        return "\n".join(lines) + "\n"


def _print_report(report: RunReport, as_json: bool, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(report.render_json() + "\n" if as_json else report.render_text())


def _load_matrix(path: str, expand_table: bool) -> ExponentMatrix:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return read_table_fragment(text) if expand_table else read_exponent_matrix(text)


def _profile(girth: int) -> CodeProfile:
    return CodeProfile.girth6() if girth == 6 else CodeProfile.girth8()


def _checker_dict(report) -> dict:
    doc: dict = {"passed": report.passed}
    if report.violation is not None:
        v = report.violation
        doc["violated_condition"] = v.tag
        doc["witness"] = {
            "row": v.row,
            "pair_columns": [list(p) for p in v.pair_columns],
            "components": list(v.components),
        }
        if v.inequality_index is not None:
            doc["witness"]["inequality_index"] = v.inequality_index
    return doc


def _oracle_dict(matrix: ExponentMatrix, profile: CodeProfile, a_max: int, b_max: int) -> dict:
    graph = lift(matrix)
    girth = bfs_girth(graph, cap=10)
    records = enumerate_ets(graph, a_max, b_max)
    counts = ets_class_counts(records)
    harmful = ets_class_counts(classify_harmful(records))
    excluded_found = sorted(set(harmful) & profile.ets_exclusions)
    return {
        "girth": girth if girth is not None else "at-least-10",
        "girth_cap": 10,
        "ets_bounds": {"a_max": a_max, "b_max": b_max},
        "ets_scope": "connected-vn-graph",
        "ets_class_counts": {f"{a},{b}": c for (a, b), c in sorted(counts.items())},
        "harmful_class_counts": {
            f"{a},{b}": c for (a, b), c in sorted(harmful.items())
        },
        "excluded_classes_found": [f"{a},{b}" for a, b in excluded_found],
    }


def _oracle_girth_ok(oracle: dict, target: int, exact: bool) -> bool:
    girth = oracle["girth"]
    if girth == "at-least-10":
        return not exact
    return girth == target if exact else girth >= target


def _matrix_dict(matrix: ExponentMatrix) -> dict:
    return {
        "n": matrix.n_cols,
        "N": matrix.lifting_degree,
        "rows": [list(row) for row in matrix.entries],
    }


def cmd_verify(args) -> int:
    started = time.perf_counter()
    try:
        matrix = _load_matrix(args.matrix, args.expand_table)
        if args.row_order:
            matrix = matrix.row_permuted(tuple(args.row_order))
        checker = check_girth6_etsfree if args.girth == 6 else check_girth8_etsfree
        result = checker(matrix)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    profile = _profile(args.girth)
    report = RunReport(
        command="verify",
        arguments={
            "matrix": args.matrix,
            "girth": args.girth,
            "oracle": args.oracle,
        },
        checker=_checker_dict(result),
        matrices=[_matrix_dict(matrix)],
    )
    passed = result.passed
    if args.oracle == "on":
        a_max, b_max = profile.enumeration_bounds
        report.oracle = _oracle_dict(matrix, profile, a_max, b_max)
        passed = (
            passed
            and _oracle_girth_ok(report.oracle, args.girth, exact=False)
            and not report.oracle["excluded_classes_found"]
        )
    report.verdict = "pass" if passed else "fail"
    report.timing_seconds = time.perf_counter() - started
    _print_report(report, args.json)
    return 0 if passed else 1


def cmd_search(args) -> int:
    started = time.perf_counter()
    if args.n_min > args.n_max:
        print(
            f"error: empty lifting range [{args.n_min}, {args.n_max}]",
            file=sys.stderr,
        )
        return 2
    profile = _profile(args.girth)
    try:
        spec = SearchSpec(
            n=args.n,
            lifting_range=(args.n_min, args.n_max),
            profile=profile,
            mode="first-found" if args.mode == "first" else "exhaustive",
            sort_columns=not args.no_column_sort,
            third_row_doubling=args.third_row_doubling,
            unit_scaling_anchor=args.unit_anchor,
            verify_with_oracle=args.verify,
            max_steps=args.max_steps,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    found = list(search(spec))
    report = RunReport(
        command="search",
        arguments={
            "n": args.n,
            "girth": args.girth,
            "N_min": args.n_min,
            "N_max": args.n_max,
            "mode": args.mode,
            "column_sort": not args.no_column_sort,
            "third_row_doubling": args.third_row_doubling,
            "unit_scaling_anchor": args.unit_anchor,
            "verified_with_oracle": args.verify,
            "lower_bound_lifting": lower_bound_lifting(args.girth, args.n),
        },
        matrices=[_matrix_dict(m) for m in found],
        verdict="pass" if found else "fail",
    )
    report.timing_seconds = time.perf_counter() - started
    _print_report(report, args.json)
    if not args.json:
        for matrix in found:
            sys.stdout.write(write_exponent_matrix(matrix))
    return 0 if found else 1


def _table_fixture_text(girth: int, n: int, degree: int) -> str:
    name = f"girth{girth}_n{n}_N{degree}.txt"
    resource = resources.files("qcets").joinpath("tables", name)
    if not resource.is_file():
        raise FileNotFoundError(f"bundled table fixture missing: {name}")
    return resource.read_text(encoding="utf-8")


def cmd_tables(args) -> int:
    started = time.perf_counter()
    girth = TABLE_GIRTH[args.which]
    profile = _profile(girth)
    a_max, b_max = profile.enumeration_bounds
    if args.ets_max_a is not None:
        a_max = args.ets_max_a
    rows = []
    any_fail = False
    for n, degree in TABLE_ROWS[args.which]:
        row: dict = {"n": n, "N": degree}
        try:
            text = _table_fixture_text(girth, n, degree)
        except FileNotFoundError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        try:
            matrix = read_exponent_matrix(text)
        except MatrixFormatError as exc:
            row["status"] = "skipped: inconsistent in source"
            row["reason"] = str(exc)
            rows.append(row)
            continue
        bound = lower_bound_lifting(girth, n)
        if degree < bound:
            row["status"] = "skipped: inconsistent in source"
            row["reason"] = f"below-lower-bound: N={degree} < {bound}"
            rows.append(row)
            continue
        checker = check_girth6_etsfree if girth == 6 else check_girth8_etsfree
        result = checker(matrix)
        row["checker"] = _checker_dict(result)
        oracle = _oracle_dict(matrix, profile, a_max, b_max)
        row["oracle"] = oracle
        ok = (
            result.passed
            and _oracle_girth_ok(oracle, girth, exact=True)
            and not oracle["excluded_classes_found"]
        )
        row["status"] = "pass" if ok else "fail"
        any_fail = any_fail or not ok
        rows.append(row)
    report = RunReport(
        command="tables",
        arguments={
            "which": args.which,
            "girth": girth,
            "ets_bounds": {"a_max": a_max, "b_max": b_max},
        },
        rows=rows,
        verdict="fail" if any_fail else "pass",
    )
    report.timing_seconds = time.perf_counter() - started
    _print_report(report, args.json)
    return 1 if any_fail else 0


def cmd_export(args) -> int:
    try:
        matrix = _load_matrix(args.matrix, args.expand_table)
        if args.format == "alist":
            payload = to_alist(lift(matrix))
        else:
            payload = write_exponent_matrix(matrix)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(payload)
        else:
            sys.stdout.write(payload)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcets",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="run the condition checker (and optionally the graph oracle)"
    )
    p_verify.add_argument("matrix", help="exponent-matrix text file")
    p_verify.add_argument("--girth", type=int, choices=(6, 8), required=True)
    p_verify.add_argument("--oracle", choices=("on", "off"), default="off")
    p_verify.add_argument(
        "--expand-table",
        action="store_true",
        help="input holds only the two free rows; prepend the zero row/column",
    )
    p_verify.add_argument(
        "--row-order",
        type=_row_order,
        default=None,
        help="comma-separated permutation of 0,1,2 applied to the rows first",
    )
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="backtracking search for passing matrices")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--girth", type=int, choices=(6, 8), required=True)
    p_search.add_argument("--N-min", dest="n_min", type=int, required=True)
    p_search.add_argument("--N-max", dest="n_max", type=int, required=True)
    p_search.add_argument("--mode", choices=("first", "exhaustive"), default="first")
    p_search.add_argument("--third-row-doubling", action="store_true")
    p_search.add_argument("--unit-anchor", dest="unit_anchor", action="store_true")
    p_search.add_argument("--no-column-sort", action="store_true")
    p_search.add_argument(
        "--verify", action="store_true", help="graph-oracle check on every hit"
    )
    p_search.add_argument("--max-steps", type=int, default=None)
    p_search.add_argument("--json", action="store_true")
    p_search.set_defaults(func=cmd_search)

    p_tables = sub.add_parser(
        "tables", help="verify the bundled reference tables (I: girth 6, II: girth 8)"
    )
    p_tables.add_argument("--which", choices=("I", "II"), required=True)
    p_tables.add_argument(
        "--ets-max-a",
        type=int,
        default=None,
        help="override the trapping-set size bound (fast mode: 6)",
    )
    p_tables.add_argument("--json", action="store_true")
    p_tables.set_defaults(func=cmd_tables)

    p_export = sub.add_parser("export", help="write alist or canonical text")
    p_export.add_argument("matrix")
    p_export.add_argument("--format", choices=("alist", "expanded-text"), required=True)
    p_export.add_argument("-o", "--output", default=None)
    p_export.add_argument("--expand-table", action="store_true")
    p_export.set_defaults(func=cmd_export)
    return parser


def _row_order(text: str) -> tuple[int, ...]:
    try:
        order = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad row order {text!r}")
    if sorted(order) != [0, 1, 2]:
        raise argparse.ArgumentTypeError("row order must permute 0,1,2")
    return order


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
