"""The `nsc` command line tool.

Every command prints a single JSON document

    {"status": "pass" | "fail" | "error", "payload": ..., "diagnostics": [...]}

with sorted keys and all numbers as exact rational literals.  Exit codes:
0 = pass, 1 = mathematical mismatch, 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .curveio import curve_to_jsonable, dump_curve, load_curve, parse_divisor
from .curves import arithmetic_genus, h0, h1
from .errors import (
    CohomologyError,
    InternalInconsistencyError,
    NscError,
    TruncationError,
    ValidationError,
    VerificationError,
)
from .genus2 import fit_parameters
from .normalform import run_recursion
from .rational import format_rational
from .sections import canonical_parameter
from .suites import SUITE_NAMES, parse_genus_range, run_suite
from .zoo import ZOO_IDS, zoo

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _print_result(status: str, payload, diagnostics=()) -> None:
    doc = {"status": status, "payload": payload, "diagnostics": list(diagnostics)}
    print(json.dumps(doc, sort_keys=True, indent=2))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nsc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("s-table", help="coefficient table of the polar-term recursion")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--j-max", type=int, default=6)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--table", action="store_true")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--genus-range", default=None)
    p.add_argument("--perturb", default=None, choices=("c1", "c2", "c3"))

    p = sub.add_parser("curve", help="exact computations on a curve spec file")
    p.add_argument("operation", choices=("genus", "h0", "h1", "alphabeta", "canonical", "fit"))
    p.add_argument("curve_file")
    p.add_argument("--divisor", default=None)
    p.add_argument("--weights", default=None)
    p.add_argument("--point", default=None)
    p.add_argument("--m-max", type=int, default=None)

    p = sub.add_parser("zoo", help="built-in curves")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("case_id", nargs="?")
    p.add_argument("out_file", nargs="?")
    return parser


def _cmd_s_table(args) -> int:
    if args.genus < 2:
        _print_result("error", None, [f"genus must be >= 2, got {args.genus}"])
        return EXIT_USAGE
    m_max = args.m_max if args.m_max is not None else args.genus + 6
    if m_max <= args.genus or args.j_max < 0:
        _print_result("error", None, ["need m-max > genus and j-max >= 0"])
        return EXIT_USAGE
    result = run_recursion(args.genus, m_max, args.j_max)
    if args.table:
        print(f"# s_{{m,j}} for genus {args.genus}")
        for (m, j), v in sorted(result.s_table.entries.items()):
            print(f"{m}\t{j}\t{format_rational(v)}")
    else:
        _print_result("pass", result.s_table.to_jsonable())
    return EXIT_PASS


def _cmd_verify(args) -> int:
    genus_range = parse_genus_range(args.genus_range) if args.genus_range else None
    ok, payload = run_suite(args.suite, genus_range=genus_range, perturb=args.perturb)
    _print_result("pass" if ok else "fail", payload)
    return EXIT_PASS if ok else EXIT_FAIL


def _parse_weights(curve, text):
    values = [int(x) for x in text.split(",")]
    ids = curve.point_ids()
    if len(values) != len(ids):
        raise ValidationError(
            f"--weights needs {len(ids)} comma-separated integers (one per marked point)"
        )
    return dict(zip(ids, values))


def _cmd_curve(args) -> int:
    curve = load_curve(args.curve_file)
    op = args.operation
    if op == "genus":
        _print_result("pass", {"genus": arithmetic_genus(curve)})
        return EXIT_PASS
    if op in ("h0", "h1"):
        if args.divisor is None:
            raise ValidationError(f"{op} needs --divisor")
        div = parse_divisor(args.divisor, curve)
        if op == "h0":
            res = h0(curve, div)
            payload = {
                "dimension": res.dimension,
                "divisor": dict(div.items),
                "basis": [fn.to_jsonable() for fn in res.basis],
            }
        else:
            payload = {"h1": h1(curve, div), "divisor": dict(div.items)}
        _print_result("pass", payload)
        return EXIT_PASS
    if args.point is None:
        raise ValidationError(f"{op} needs --point")
    pid = f"p{curve.point_index(args.point)}"
    g = arithmetic_genus(curve)
    if op == "alphabeta":
        others = [q for q in curve.point_ids() if q != pid]
        if not others:
            raise ValidationError("alphabeta needs a second marked point")
        jid = others[0]
        weights = _parse_weights(curve, args.weights) if args.weights else {pid: g - 1, jid: 1}
        from .sections import alpha_beta

        alpha, beta = alpha_beta(curve, pid, jid, weights=weights)
        _print_result("pass", {
            "alpha": format_rational(alpha),
            "beta": format_rational(beta),
            "point": pid,
            "second_point": jid,
        })
        return EXIT_PASS
    if op == "canonical":
        weights = _parse_weights(curve, args.weights) if args.weights else {pid: g}
        m_max = args.m_max if args.m_max is not None else g + 4
        pc = canonical_parameter(curve, weights, pid, m_max)
        coeffs = {str(e): format_rational(pc.coefficient(e)) for e in range(2, pc.order())}
        _print_result("pass", {"point": pid, "m_max": m_max, "coefficients": coeffs})
        return EXIT_PASS
    if op == "fit":
        params = fit_parameters(curve, pid)
        _print_result("pass", {
            "q1": format_rational(params.q1),
            "q20": format_rational(params.q20),
            "q21": format_rational(params.q21),
            "q30": format_rational(params.q30),
            "q31": format_rational(params.q31),
        })
        return EXIT_PASS
    raise ValidationError(f"unknown curve operation {op!r}")


def _cmd_zoo(args) -> int:
    if args.action == "list":
        _print_result("pass", {"cases": list(ZOO_IDS), "family": "ccusp<a> for a >= 1"})
        return EXIT_PASS
    if args.case_id is None or args.out_file is None:
        _print_result("error", None, ["zoo emit needs CASE_ID and OUT_FILE"])
        return EXIT_USAGE
    curve = zoo(args.case_id)
    dump_curve(curve, args.out_file)
    _print_result("pass", {"case": args.case_id, "written": args.out_file,
                           "curve": curve_to_jsonable(curve)})
    return EXIT_PASS


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        if args.command == "s-table":
            return _cmd_s_table(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "curve":
            return _cmd_curve(args)
        if args.command == "zoo":
            return _cmd_zoo(args)
        return EXIT_USAGE
    except (ValidationError, CohomologyError, TruncationError, FileNotFoundError) as exc:
        _print_result("error", None, [str(exc)])
        return EXIT_USAGE
    except (VerificationError, InternalInconsistencyError) as exc:
        _print_result("fail", None, [str(exc)])
        return EXIT_FAIL
    except NscError as exc:
        _print_result("error", None, [str(exc)])
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
