"""Command-line interface.

Every command prints exactly one document: JSON by default, or aligned
text with ``--format table``.  Exit codes: 0 success / property holds,
1 property fails, 2 usage or parse error, 3 brute-force cap refusal.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .analysis import (
    DEFAULT_VERIFY_BRUTE,
    audit_poc_hamiltonian,
    classify_poc_hamiltonian,
    is_perfect_order_classes,
    necessary_divisibility_conditions,
)
from .bruteforce import DEFAULT_CAP, CapExceeded, brute_force_order_counts, hall_projection_check
from .closedform import OrderClassTable, group_order_counts
from .groupspec import SpecParseError, parse_spec, render_spec
from .numtheory import solve_consecutive_prime_powers

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def table_json(table: OrderClassTable) -> list:
    return [[k, str(c)] for k, c in table]


def counts_json(counts: dict[int, int]) -> list:
    return [[k, str(c)] for k, c in sorted(counts.items())]


def spec_json(spec) -> dict:
    return {"spec": render_spec(spec), "order": spec.order}


def _parse(text: str):
    try:
        return parse_spec(text)
    except SpecParseError as exc:
        raise UsageError(str(exc)) from None


# -- commands -------------------------------------------------------------------
# Each returns (inputs, result, exit_code).


def cmd_counts(args):
    spec = _parse(args.spec)
    inputs = {"spec": args.spec, "method": args.method, "cap": args.cap}
    result = {"group": spec_json(spec)}
    code = EXIT_OK
    closed = brute = None
    if args.method in ("closed", "both"):
        closed = group_order_counts(spec)
        result["closed"] = table_json(closed)
    if args.method in ("brute", "both"):
        brute = brute_force_order_counts(spec, args.cap)
        result["brute"] = table_json(brute)
    if args.method == "both":
        result["agree"] = closed == brute
        if not result["agree"]:
            code = EXIT_FAIL
    return inputs, result, code


def cmd_check(args):
    spec = _parse(args.spec)
    table = group_order_counts(spec)
    verdict = is_perfect_order_classes(table)
    result = {
        "group": spec_json(spec),
        "table": table_json(table),
        "is_poc": verdict.is_poc,
        "witnesses": [[k, str(c)] for k, c in verdict.witnesses],
    }
    if verdict.is_poc:
        nec = necessary_divisibility_conditions(table)
        result["necessary_conditions"] = {"ok": nec.ok, "failures": list(nec.failures)}
    return {"spec": args.spec}, result, EXIT_OK if verdict.is_poc else EXIT_FAIL


def cmd_classify(args):
    if args.max_order < 8:
        raise UsageError(f"--max-order must be >= 8, got {args.max_order}")
    if args.verify_brute < 0:
        raise UsageError("--verify-brute must be non-negative")
    report = classify_poc_hamiltonian(args.max_order, args.verify_brute, args.cap)
    audit = audit_poc_hamiltonian(report)
    if args.csv:
        write_report_csv(report, args.csv)
    inputs = {
        "max_order": args.max_order,
        "verify_brute": args.verify_brute,
        "cap": args.cap,
        "csv": args.csv,
    }
    result = {
        "max_order": report.max_order,
        "examined": report.examined,
        "poc_groups": [spec_json(h) for h in report.poc_groups],
        "theorem_set": [spec_json(h) for h in report.theorem_set],
        "match": report.match,
        "brute_verified": report.brute_verified,
        "brute_mismatches": [spec_json(h) for h in report.brute_mismatches],
        "audit": {
            "ok": audit.ok,
            "passed": audit.passed,
            "failed": audit.failed,
        },
    }
    ok = report.match and audit.ok and not report.brute_mismatches
    return inputs, result, EXIT_OK if ok else EXIT_FAIL


def cmd_conspp(args):
    if args.limit < 1:
        raise UsageError(f"--limit must be positive, got {args.limit}")
    sols = solve_consecutive_prime_powers(args.limit)
    result = {
        "count": len(sols),
        "solutions": [
            {"p": s.p, "m": s.m, "q": s.q, "n": s.n, "case": s.case.value} for s in sols
        ],
    }
    return {"limit": args.limit}, result, EXIT_OK


def cmd_hall(args):
    a, b = _parse(args.spec_a), _parse(args.spec_b)
    try:
        verdict = hall_projection_check(a, b, args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cx = None
    if verdict.counterexample is not None:
        x, y = verdict.counterexample
        cx = {"a": [x.q_part, list(x.residues)], "b": [y.q_part, list(y.residues)]}
    result = {
        "a": spec_json(a),
        "b": spec_json(b),
        "passed": verdict.passed,
        "contained": verdict.contained,
        "counts_agree": verdict.counts_agree,
        "counts_product": counts_json(verdict.counts_product),
        "counts_factor": counts_json(verdict.counts_factor),
        "mismatched_orders": list(verdict.mismatched_orders),
        "counterexample": cx,
    }
    inputs = {"spec_a": args.spec_a, "spec_b": args.spec_b, "cap": args.cap}
    return inputs, result, EXIT_OK if verdict.passed else EXIT_FAIL


def write_report_csv(report, path: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["spec", "order", "e", "is_poc", "predicted", "witnesses",
                    "brute_checked", "brute_agrees"])
        for row in report.rows:
            w.writerow([
                render_spec(row.spec),
                row.order,
                row.spec.e,
                int(row.verdict.is_poc),
                int(row.predicted),
                " ".join(f"{k}:{c}" for k, c in row.verdict.witnesses),
                int(row.brute_checked),
                "" if row.brute_agrees is None else int(row.brute_agrees),
            ])


# -- text rendering ---------------------------------------------------------------


def _fmt_pairs(pairs) -> list[str]:
    width = max((len(str(k)) for k, _ in pairs), default=1)
    return [f"  {k:>{width}}  {c}" for k, c in pairs]


def render_text(doc: dict) -> str:
    cmd, res = doc["command"], doc["result"]
    lines = [f"# {cmd}"]
    if "group" in res:
        g = res["group"]
        lines.append(f"group: {g['spec']} (order {g['order']})")
    if cmd == "counts":
        for method in ("closed", "brute"):
            if method in res:
                lines.append(f"{method}:  order  count")
                lines += _fmt_pairs(res[method])
        if "agree" in res:
            lines.append(f"agree: {res['agree']}")
    elif cmd == "check":
        lines.append("order  count")
        lines += _fmt_pairs(res["table"])
        lines.append(f"is_poc: {res['is_poc']}")
        for k, c in res["witnesses"]:
            lines.append(f"  witness: #({k}) = {c} does not divide {res['group']['order']}")
    elif cmd == "classify":
        lines.append(f"examined: {res['examined']} Hamiltonian groups of order <= {res['max_order']}")
        lines.append(f"brute-force verified: {res['brute_verified']}")
        lines.append("POC groups:")
        lines += [f"  {g['order']:>8}  {g['spec']}" for g in res["poc_groups"]]
        lines.append(f"match with predicted set: {res['match']}")
        a = res["audit"]
        for name, n in a["passed"].items():
            lines.append(f"  audit {name}: {n} passed, {len(a['failed'][name])} failed")
    elif cmd == "conspp":
        lines.append(f"{res['count']} solutions of p^m - 1 = q^n")
        for s in res["solutions"]:
            lines.append(f"  {s['p']}^{s['m']} - 1 = {s['q']}^{s['n']}  {s['case']}")
    elif cmd == "hall":
        lines.append(f"A = {res['a']['spec']}, B = {res['b']['spec']}")
        lines.append(f"passed: {res['passed']} (contained={res['contained']}, "
                     f"counts_agree={res['counts_agree']})")
        lines.append("order  #A  #AxB")
        prod = dict((k, c) for k, c in res["counts_product"])
        for k, c in res["counts_factor"]:
            lines.append(f"  {k}  {c}  {prod.get(k, '0')}")
    return "\n".join(lines)


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default=argparse.SUPPRESS,
                        help="output format (default: json)")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"brute-force element cap (default: {DEFAULT_CAP})")

    parser = argparse.ArgumentParser(
        prog="pocgroups",
        description="Order classes of groups Q x C_n1 x ... and perfect order classes.",
    )
    parser.add_argument("--format", choices=["json", "table"], default="json")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("counts", parents=[common], help="order-class table of a group")
    p.add_argument("spec")
    p.add_argument("--method", choices=["closed", "brute", "both"], default="closed")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("check", parents=[common], help="test for perfect order classes")
    p.add_argument("spec")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", parents=[common],
                       help="classify Hamiltonian groups with perfect order classes")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--verify-brute", type=int, default=DEFAULT_VERIFY_BRUTE,
                   help="re-check groups up to this order by enumeration "
                        f"(default: {DEFAULT_VERIFY_BRUTE})")
    p.add_argument("--csv", metavar="PATH", help="write one row per examined group")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("conspp", parents=[common], help="solve p^m - 1 = q^n up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_conspp)

    p = sub.add_parser("hall", parents=[common], help="check A as a Hall subgroup of A x B")
    p.add_argument("spec_a")
    p.add_argument("spec_b")
    p.set_defaults(func=cmd_hall)
    return parser


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap < 1:
        print("error: --cap must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        inputs, result, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": inputs,
        "result": result,
    }
    print(render_text(doc) if args.format == "table" else dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
