"""Command-line front end for exact chi computations.

Reads an integer matrix (rows separated by ';' or newlines, entries by
whitespace), evaluates chi by the chosen method(s), and prints exact
reduced fractions. Batch mode takes a file of blank-line-separated
matrices and streams one record per matrix; a bad entry is reported
and skipped. Exit codes: 0 success, 1 input error, 2 method
disagreement under --check.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from .dr_matrix import DRMatrix
from .formulas import closed_chi, leading_term, rank_one_chi
from .recursion import EvalCache, recursive_chi

__all__ = ["main", "parse_matrix", "render_matrix", "run"]

_INT = re.compile(r"-?[0-9]+")
_ROW_TOKEN = re.compile(r"[^\s;]+|;")


def parse_matrix(text: str) -> DRMatrix:
    """Parse matrix text into a validated DRMatrix.

    Grammar: rows are separated by ';' or newlines; entries are base-10
    integers (optional leading '-') separated by whitespace. Empty rows
    from doubled separators are ignored. Bad tokens raise ValueError
    with line and column; ragged rows and nonzero row sums raise with
    the offending row index.
    """
    rows = []
    current = []
    current_line = 0

    def close_row():
        nonlocal current
        if current:
            rows.append((current_line, current))
            current = []

    for lineno, line in enumerate(text.split("\n"), start=1):
        for match in _ROW_TOKEN.finditer(line):
            token = match.group()
            if token == ";":
                close_row()
                continue
            if _INT.fullmatch(token) is None:
                raise ValueError(
                    f"line {lineno}, column {match.start() + 1}: "
                    f"expected an integer, got {token!r}"
                )
            if not current:
                current_line = lineno
            current.append(int(token))
        close_row()

    if not rows:
        raise ValueError("empty matrix input")
    width = len(rows[0][1])
    for index, (lineno, entries) in enumerate(rows, start=1):
        if len(entries) != width:
            raise ValueError(
                f"row {index} (line {lineno}) has {len(entries)} entries, "
                f"expected {width}"
            )
        total = sum(entries)
        if total != 0:
            raise ValueError(f"row {index} sums to {total}, expected 0")
    return DRMatrix([entries for _, entries in rows])


def render_matrix(matrix: DRMatrix) -> str:
    """One-line matrix form accepted back by parse_matrix."""
    return "; ".join(" ".join(str(e) for e in row) for row in matrix.entries)


def run(argv=None) -> int:
    """Entry point returning the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if (args.matrix is None) == (args.batch is None):
        print("error: provide a MATRIX argument or --batch FILE, not both",
              file=sys.stderr)
        return 1

    if args.batch is None:
        code, lines = _process(args.matrix, args)
        for line in lines:
            print(line)
        return code

    try:
        with open(args.batch, encoding="utf-8") as handle:
            content = handle.read()
    except OSError as exc:
        print(f"error: cannot read batch file: {exc}", file=sys.stderr)
        return 1
    worst = 0
    for chunk in re.split(r"\n\s*\n", content.strip()):
        if not chunk.strip():
            continue
        code, lines = _process(chunk, args, batch=True)
        for line in lines:
            print(line)
        worst = max(worst, code)
    return worst


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drchi",
        description="Exact orbifold Euler characteristics of genus-one "
        "double ramification loci.",
    )
    parser.add_argument(
        "matrix",
        nargs="?",
        help="matrix text, e.g. '2 -2 0 0; 0 0 2 -2' (rows split on ';' "
        "or newlines)",
    )
    parser.add_argument(
        "--method",
        choices=["closed", "recursion", "rank1", "both"],
        default="closed",
        help="evaluation method; 'both' runs closed and recursion "
        "(plus rank1 on single-row input)",
    )
    parser.add_argument(
        "--check",
        action="store_true",
        help="exit 2 if the computed methods disagree",
    )
    parser.add_argument(
        "--leading-term",
        action="store_true",
        help="also print the top partition-sum slice",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="emit one flat JSON record per matrix",
    )
    parser.add_argument(
        "--batch",
        metavar="FILE",
        help="read blank-line-separated matrices from FILE",
    )
    parser.add_argument(
        "--stats",
        action="store_true",
        help="print timings and cache counters to stderr",
    )
    return parser


def _process(text: str, args, batch: bool = False):
    """Evaluate one matrix text; returns (exit code, output lines)."""
    echo = " ".join(text.split())
    try:
        matrix = parse_matrix(text)
        values, timings, cache = _evaluate(matrix, args.method)
        extra = leading_term(matrix) if args.leading_term else None
    except ValueError as exc:
        if batch:
            if args.json:
                return 1, [_dump({"input": echo, "error": str(exc)})]
            return 1, [f"{echo} => error: {exc}"]
        print(f"error: {exc}", file=sys.stderr)
        return 1, []

    agree = len(set(values.values())) == 1
    code = 2 if args.check and not agree else 0
    if args.stats:
        _print_stats(render_matrix(matrix), timings, cache)

    if args.json:
        record = {"input": render_matrix(matrix), "r": matrix.r, "n": matrix.n}
        for name, value in values.items():
            record[f"{name}_num"] = str(value.numerator)
            record[f"{name}_den"] = str(value.denominator)
        record["agree"] = agree
        if extra is not None:
            record["leading_num"] = str(extra.numerator)
            record["leading_den"] = str(extra.denominator)
        return code, [_dump(record)]

    if agree:
        parts = [str(next(iter(values.values())))]
    else:
        parts = [f"{name} {value}" for name, value in values.items()]
    if extra is not None:
        parts.append(f"leading-term {extra}")
    if batch:
        return code, [f"{render_matrix(matrix)} => " + "; ".join(parts)]
    return code, parts


def _evaluate(matrix: DRMatrix, method: str):
    """Run the requested method(s); returns (values, timings, cache)."""
    values = {}
    timings = {}
    cache = None
    if method in ("closed", "both"):
        start = time.perf_counter()
        values["closed"] = closed_chi(matrix)
        timings["closed"] = (time.perf_counter() - start) * 1000.0
    if method in ("recursion", "both"):
        cache = EvalCache()
        start = time.perf_counter()
        values["recursion"] = recursive_chi(matrix, cache)
        timings["recursion"] = (time.perf_counter() - start) * 1000.0
    if method == "rank1" or (method == "both" and matrix.r == 1):
        if matrix.r != 1:
            raise ValueError(
                f"method rank1 needs a single-row matrix, got {matrix.r} rows"
            )
        start = time.perf_counter()
        values["rank1"] = rank_one_chi(matrix.entries[0])
        timings["rank1"] = (time.perf_counter() - start) * 1000.0
    return values, timings, cache


def _print_stats(echo: str, timings: dict, cache) -> None:
    parts = [f"{name} {ms:.3f}ms" for name, ms in timings.items()]
    if cache is not None:
        parts.append(f"cache_hits {cache.hits}")
        parts.append(f"cache_misses {cache.misses}")
    print(f"stats[{echo}]: " + ", ".join(parts), file=sys.stderr)


def _dump(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))
