"""Batch command-line interface.

Subcommands: `resistance` (one query, several methods, cross-checked),
`sweep` (parameter grids, deterministic order), `verify` (identity
catalogue as JSON lines), `reduce` (chain reduction with an optional
step-by-step log).  Exit codes: 0 success, 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional

from .formulas import (
    BentParams,
    bent_resistance_alternating,
    bent_resistance_product,
    straight_pair_resistance,
)
from .graphs import GraphError, WeightedGraph, bent_2tree, straight_2tree
from .identities import PROFILES, run_all
from .rational import decimal_string, ratio_string
from .reduction import ReductionError, reduce_bent, reduce_straight_state
from .resistance import resistance_exact, resistance_float

FLOAT_RELATIVE_TOLERANCE = 1e-9
ORACLE_DEFAULT_CUTOFF = 200

CSV_COLUMNS = ("command", "family", "n", "k", "i", "j", "exact", "decimal", "methods", "agree")


class UsageError(ValueError):
    """Bad parameters; reported with a diagnostic and exit code 2."""


def _bent_methods() -> dict:
    return {
        "alternating": lambda n, k, i, j: bent_resistance_alternating(BentParams(n, k)),
        "product": lambda n, k, i, j: bent_resistance_product(BentParams(n, k)),
        "engine": lambda n, k, i, j: reduce_bent(n, k)[0],
        "exact": lambda n, k, i, j: resistance_exact(bent_2tree(n, k), i, j),
        "float": lambda n, k, i, j: resistance_float(bent_2tree(n, k), i, j),
    }


def _straight_methods() -> dict:
    return {
        "formula": lambda n, k, i, j: straight_pair_resistance(n - 2, i, j - i),
        "engine": lambda n, k, i, j: reduce_straight_state(n)[0],
        "exact": lambda n, k, i, j: resistance_exact(straight_2tree(n), i, j),
        "float": lambda n, k, i, j: resistance_float(straight_2tree(n), i, j),
    }


def _applicable_methods(family: str, n: int, i: int, j: int) -> list[str]:
    if family == "bent":
        return ["alternating", "product", "engine", "exact", "float"]
    methods = ["formula"]
    if (i, j) == (1, n):
        methods.append("engine")
    methods.extend(["exact", "float"])
    return methods


def _default_methods(family: str, n: int, i: int, j: int) -> list[str]:
    if family == "bent":
        return ["alternating", "engine"]
    if (i, j) == (1, n):
        return ["formula", "engine"]
    if n <= ORACLE_DEFAULT_CUTOFF:
        return ["formula", "exact"]
    return ["formula"]


def _resolve_methods(requested: Optional[str], family: str, n: int, i: int, j: int) -> list[str]:
    applicable = _applicable_methods(family, n, i, j)
    if requested is None or requested == "default":
        return _default_methods(family, n, i, j)
    if requested == "all":
        return applicable
    chosen = [m.strip() for m in requested.split(",") if m.strip()]
    if not chosen:
        raise UsageError("empty method list")
    for m in chosen:
        if m not in applicable:
            raise UsageError(
                f"method {m!r} is not applicable here; choose from {', '.join(applicable)}"
            )
    return chosen


def _validate_query(family: str, n: int, k: Optional[int], i: Optional[int], j: Optional[int]):
    if family == "bent":
        if k is None:
            raise UsageError("bent queries need --k")
        BentParams(n, k)  # raises with the precondition named
        qi = 1 if i is None else i
        qj = n if j is None else j
        if (qi, qj) != (1, n):
            raise UsageError("bent-chain resistance is only supported between vertices 1 and n")
        return qi, qj
    if n < 3:
        raise UsageError("straight chains need n >= 3")
    if k is not None:
        raise UsageError("--k applies to the bent family only")
    qi = 1 if i is None else i
    qj = n if j is None else j
    if not (1 <= qi < qj <= n):
        raise UsageError(f"need 1 <= i < j <= n, got i={qi}, j={qj}")
    return qi, qj


def build_record(
    command: str,
    family: str,
    n: int,
    k: Optional[int],
    i: int,
    j: int,
    methods: list[str],
    digits: int,
) -> dict:
    table = _bent_methods() if family == "bent" else _straight_methods()
    values: dict[str, Fraction | float] = {}
    for tag in methods:
        values[tag] = table[tag](n, k, i, j)
    rational = {t: v for t, v in values.items() if isinstance(v, Fraction)}
    reference = next(iter(rational.values()), None)
    agree: Optional[bool] = None
    if len(values) >= 2:
        agree = all(v == reference for v in rational.values())
        if reference is not None:
            ref = float(reference)
            for t, v in values.items():
                if isinstance(v, float):
                    agree = agree and abs(v - ref) <= FLOAT_RELATIVE_TOLERANCE * abs(ref)
    return {
        "command": command,
        "family": family,
        "n": n,
        "k": k,
        "i": i,
        "j": j,
        "exact": ratio_string(reference) if reference is not None else None,
        "decimal": decimal_string(reference, digits) if reference is not None else None,
        "methods": {
            t: (ratio_string(v) if isinstance(v, Fraction) else repr(v))
            for t, v in values.items()
        },
        "agree": agree,
    }


def _record_to_text(record: dict) -> str:
    where = f"r({record['i']},{record['j']})"
    head = f"{record['family']} n={record['n']}"
    if record["k"] is not None:
        head += f" k={record['k']}"
    methods = ",".join(record["methods"])
    agree = {True: "yes", False: "NO", None: "n/a"}[record["agree"]]
    return f"{head} {where} = {record['exact']} = {record['decimal']} [{methods}] agree={agree}"


def _record_to_csv_row(record: dict) -> list[str]:
    methods = ";".join(f"{t}={v}" for t, v in record["methods"].items())
    agree = "" if record["agree"] is None else str(record["agree"]).lower()
    return [
        record["command"],
        record["family"],
        str(record["n"]),
        "" if record["k"] is None else str(record["k"]),
        str(record["i"]),
        str(record["j"]),
        record["exact"] or "",
        record["decimal"] or "",
        methods,
        agree,
    ]


def emit_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for record in records:
            out.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(_record_to_csv_row(record))
        out.write(buffer.getvalue())
    else:
        for record in records:
            out.write(_record_to_text(record) + "\n")


# -- subcommand drivers -------------------------------------------------------

def _cmd_resistance(args, out) -> int:
    i, j = _validate_query(args.family, args.n, args.k, args.i, args.j)
    methods = _resolve_methods(args.methods, args.family, args.n, i, j)
    record = build_record("resistance", args.family, args.n, args.k, i, j, methods, args.digits)
    emit_records([record], args.format, out)
    return 0


def _parse_span(text: str) -> tuple[int, int]:
    if ":" in text:
        lo_text, hi_text = text.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _cmd_sweep(args, out) -> int:
    lo, hi = _parse_span(args.n)
    if args.family == "straight" and args.k is not None:
        raise UsageError("--k applies to the bent family only")
    records = []
    for n in range(lo, hi + 1):
        if args.family == "straight":
            if n < 3:
                raise UsageError("straight chains need n >= 3")
            i, j = 1, n
            methods = _resolve_methods(args.methods, "straight", n, i, j)
            records.append(build_record("sweep", "straight", n, None, i, j, methods, args.digits))
            continue
        if n < 6:
            raise UsageError("bent chains need n >= 6")
        if args.k_policy == "all":
            bends = range(3, n - 2)
        elif args.k_policy == "fixed":
            if args.k is None:
                raise UsageError("k-policy 'fixed' needs --k")
            bends = [args.k] if 3 <= args.k <= n - 3 else []
        else:  # center
            bends = [min(max(3, n // 2), n - 3)]
        for k in bends:
            methods = _resolve_methods(args.methods, "bent", n, 1, n)
            records.append(build_record("sweep", "bent", n, k, 1, n, methods, args.digits))
    emit_records(records, args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    reports = run_all(profile=args.profile)
    failures = 0
    for report in reports:
        out.write(json.dumps(report.to_json_dict()) + "\n")
        if report.status != "pass":
            failures += 1
    print(
        f"checked {len(reports)} identities on the {args.profile} profile: "
        f"{len(reports) - failures} passed, {failures} failed",
        file=sys.stderr,
    )
    return 0 if failures == 0 else 1


def _detect_family(g: WeightedGraph) -> tuple[str, Optional[int]]:
    if any(w != 1 for _, _, w in g.edges):
        raise UsageError("only unit-weight chains are reducible; found non-unit weights")
    edge_set = {(a, b) for a, b, _ in g.edges}
    if g.n >= 3:
        straight = {(a, b) for a, b, _ in straight_2tree(g.n).edges}
        if edge_set == straight:
            return "straight", None
    if g.n >= 6:
        for k in range(3, g.n - 2):
            bent = {(a, b) for a, b, _ in bent_2tree(g.n, k).edges}
            if edge_set == bent:
                return "bent", k
    raise UsageError("unsupported topology: not a straight or singly-bent chain")


def _cmd_reduce(args, out) -> int:
    if args.what == "straight":
        n, k = args.n, None
        if n is None:
            raise UsageError("reduce straight needs N")
    elif args.what == "bent":
        n, k = args.n, args.k
        if n is None or k is None:
            raise UsageError("reduce bent needs N and K")
    else:
        try:
            with open(args.path, encoding="utf-8") as handle:
                graph = WeightedGraph.from_text(handle.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.path}: {exc}") from exc
        if not graph.is_connected():
            raise UsageError("input graph is disconnected")
        family, k = _detect_family(graph)
        n = graph.n
        args.what = family

    if args.what == "straight":
        value, state = reduce_straight_state(n)
        i, j = 1, n
        family = "straight"
    else:
        value, state = reduce_bent(n, k)
        i, j = 1, n
        family = "bent"

    record = {
        "command": "reduce",
        "family": family,
        "n": n,
        "k": k,
        "i": i,
        "j": j,
        "exact": ratio_string(value),
        "decimal": decimal_string(value, args.digits),
        "methods": {"engine": ratio_string(value)},
        "agree": None,
    }
    emit_records([record], args.format, out)
    if args.emit_log:
        for step in state.log:
            out.write(json.dumps(step.to_json_dict()) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twotree",
        description="Exact resistance distance in straight and bent linear 2-trees.",
        epilog="Environment: TWO_TREE_CACHE_LIMIT caps the sequence cache index.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--digits", type=int, default=12, help="significant digits for decimals")

    p_res = sub.add_parser("resistance", help="one resistance query, cross-checked")
    p_res.add_argument("family", choices=("straight", "bent"))
    p_res.add_argument("--n", type=int, required=True)
    p_res.add_argument("--k", type=int)
    p_res.add_argument("--i", type=int)
    p_res.add_argument("--j", type=int)
    p_res.add_argument("--methods", help="comma list, 'all', or 'default'")
    add_common(p_res)

    p_sweep = sub.add_parser("sweep", help="grid of queries in deterministic order")
    p_sweep.add_argument("family", choices=("straight", "bent"))
    p_sweep.add_argument("--n", required=True, help="single N or range LO:HI")
    p_sweep.add_argument("--k", type=int)
    p_sweep.add_argument("--k-policy", choices=("all", "fixed", "center"), default="all")
    p_sweep.add_argument("--methods", help="comma list, 'all', or 'default'")
    add_common(p_sweep)

    p_verify = sub.add_parser("verify", help="run the identity catalogue")
    p_verify.add_argument("--profile", choices=PROFILES, default="standard")

    p_reduce = sub.add_parser("reduce", help="chain reduction with optional step log")
    reduce_sub = p_reduce.add_subparsers(dest="what", required=True)
    p_red_s = reduce_sub.add_parser("straight")
    p_red_s.add_argument("n", type=int)
    p_red_b = reduce_sub.add_parser("bent")
    p_red_b.add_argument("n", type=int)
    p_red_b.add_argument("k", type=int)
    p_red_f = reduce_sub.add_parser("file")
    p_red_f.add_argument("path")
    for p in (p_red_s, p_red_b, p_red_f):
        p.add_argument("--emit-log", action="store_true")
        add_common(p)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = sys.stdout
    try:
        if args.cmd == "resistance":
            return _cmd_resistance(args, out)
        if args.cmd == "sweep":
            return _cmd_sweep(args, out)
        if args.cmd == "verify":
            return _cmd_verify(args, out)
        if args.cmd == "reduce":
            return _cmd_reduce(args, out)
        parser.error(f"unknown command {args.cmd!r}")
    except (UsageError, GraphError, ReductionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
