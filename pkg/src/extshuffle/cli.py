"""Command-line front end.

Exit codes: 0 on success or a passing check, 1 on a failing check or a
divergent/non-converged result, 2 on usage errors (including unparseable
arguments).  All data output is deterministic given the flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import format_composition as _fmt
from .chenfrac import VanishingDenominatorError, evaluate, evaluation_panel, variables
from .convergence import first_divergent_index, is_convergent
from .parsing import (
    ParseError,
    parse_assignment,
    parse_composition,
    parse_fraction,
    parse_symbol,
)
from .relations import enumerate_relations
from .shuffle import ext_shuffle, stuffle
from .symbols import symbol_product
from .zeta import DEFAULT_MAX_N, verify_homomorphism, zeta


def _cmd_shuffle(args) -> int:
    result = ext_shuffle(parse_composition(args.a), parse_composition(args.b))
    print(json.dumps(result.to_json_dict()) if args.json else result)
    return 0


def _cmd_stuffle(args) -> int:
    result = stuffle(parse_composition(args.a), parse_composition(args.b))
    print(json.dumps(result.to_json_dict()) if args.json else result)
    return 0


def _cmd_symbol_product(args) -> int:
    result = symbol_product(parse_symbol(args.a), parse_symbol(args.b))
    print(json.dumps(result.to_json_dict()) if args.json else result)
    return 0


def _cmd_fraction_eval(args) -> int:
    frac = parse_fraction(args.fraction)
    if args.points:
        point = dict(parse_assignment(p) for p in args.points)
        try:
            value = evaluate(frac, point)
        except VanishingDenominatorError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if args.json:
            print(json.dumps({"fraction": str(frac), "value": str(value)}))
        else:
            print(value)
        return 0
    # no explicit point: evaluate across the seeded panel
    panel = evaluation_panel(variables(frac), seed=args.seed)
    rows = []
    for point in panel:
        value = evaluate(frac, point)
        rows.append(
            {
                "point": {str(i): str(v) for i, v in sorted(point.items())},
                "value": str(value),
            }
        )
    if args.json:
        print(json.dumps({"fraction": str(frac), "panel": rows}))
    else:
        for row in rows:
            assignments = " ".join(f"{i}={v}" for i, v in row["point"].items())
            print(f"{row['value']}\tat {assignments if assignments else '(no variables)'}")
    return 0


def _cmd_convergent(args) -> int:
    comp = parse_composition(args.composition)
    if is_convergent(comp):
        print("convergent")
        return 0
    j, w = first_divergent_index(comp)
    print(f"partial weight at j={j} is {w}, requires > {j}")
    return 1


def _cmd_zeta(args) -> int:
    comp = parse_composition(args.composition)
    if not is_convergent(comp):
        j, w = first_divergent_index(comp)
        print(
            f"error: divergent composition (partial weight at j={j} is {w}, requires > {j})",
            file=sys.stderr,
        )
        return 1
    est = zeta(comp, args.tol, max_n=args.max_n)
    if args.json:
        print(
            json.dumps(
                {
                    "value": est.value,
                    "est_error": est.est_error,
                    "cutoff": est.cutoff,
                    "converged": est.converged,
                }
            )
        )
    else:
        print(f"{est.value:.10f}")
        print(f"est_error = {est.est_error:.3e}")
        print(f"cutoff = {est.cutoff}")
        print(f"converged = {est.converged}")
    return 0 if est.converged else 1


def _cmd_verify(args) -> int:
    a = parse_composition(args.a)
    b = parse_composition(args.b)
    for comp in (a, b):
        if not is_convergent(comp):
            print(f"error: divergent composition {comp}", file=sys.stderr)
            return 1
    report = verify_homomorphism(a, b, args.tol, max_n=args.max_n)
    if args.json:
        print(
            json.dumps(
                {
                    "pass": report.passed,
                    "lhs": report.lhs.value,
                    "rhs": report.rhs_value,
                    "delta": report.delta,
                    "tolerance": report.tolerance,
                    "expansion": report.expansion.to_json_dict(),
                }
            )
        )
    else:
        print(f"expansion: {report.expansion}")
        print(f"series of expansion = {report.lhs.value:.10f}")
        print(f"product of series   = {report.rhs_value:.10f}")
        print(f"delta = {report.delta:.3e} (tolerance {report.tolerance:.3e})")
        print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def _cmd_relations(args) -> int:
    scan = enumerate_relations(
        args.max_depth,
        (args.min_entry, args.max_entry),
        args.tol,
        max_n=args.max_n,
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "relations": [
                        {
                            "a": list(rel.a),
                            "b": list(rel.b),
                            "relation": rel.difference.to_json_dict(),
                            "residual": rel.residual,
                            "est_error": rel.est_error,
                        }
                        for rel in scan.relations
                    ],
                    "skipped": [
                        {
                            "a": list(sk.a),
                            "b": list(sk.b),
                            "nonconvergent": [list(t) for t in sk.nonconvergent_terms],
                        }
                        for sk in scan.skipped
                    ],
                }
            )
        )
    else:
        for rel in scan.relations:
            print(
                f"{rel.difference}    "
                f"(from {_fmt(rel.a)} * {_fmt(rel.b)}, residual {rel.residual:.2e})"
            )
        for sk in scan.skipped:
            terms = ", ".join(_fmt(t) for t in sk.nonconvergent_terms)
            print(f"skipped {_fmt(sk.a)} * {_fmt(sk.b)}: non-convergent terms {terms}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extshuffle",
        description="Extended shuffle products, Chen symbols/fractions, and "
        "numeric evaluation of convergent nested zeta series.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    json_flag = argparse.ArgumentParser(add_help=False)
    json_flag.add_argument("--json", action="store_true", help="emit JSON")

    numeric = argparse.ArgumentParser(add_help=False)
    numeric.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="cutoff cap")

    p = sub.add_parser("shuffle", parents=[json_flag], help="extended shuffle product")
    p.add_argument("a", help="composition, e.g. '[1,-2]' or '1'")
    p.add_argument("b")
    p.set_defaults(func=_cmd_shuffle)

    p = sub.add_parser("stuffle", parents=[json_flag], help="quasi-shuffle product")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_stuffle)

    p = sub.add_parser(
        "symbol-product", parents=[json_flag], help="locality product of Chen symbols"
    )
    p.add_argument("a", help="symbol, e.g. '<[1,1];[1,2]>' or '1'")
    p.add_argument("b")
    p.set_defaults(func=_cmd_symbol_product)

    p = sub.add_parser(
        "fraction-eval", parents=[json_flag], help="evaluate a Chen fraction exactly"
    )
    p.add_argument("fraction", help="fraction, e.g. 'f([1,1];[1,2])'")
    p.add_argument("points", nargs="*", help="assignments like 2=1/3; omit for panel")
    p.add_argument("--seed", type=int, default=0, help="evaluation panel seed")
    p.set_defaults(func=_cmd_fraction_eval)

    p = sub.add_parser("convergent", help="test the series convergence criterion")
    p.add_argument("composition")
    p.set_defaults(func=_cmd_convergent)

    p = sub.add_parser(
        "zeta", parents=[json_flag, numeric], help="estimate a convergent nested series"
    )
    p.add_argument("composition")
    p.add_argument("--tol", type=float, default=1e-6, help="target tolerance")
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser(
        "verify",
        parents=[json_flag, numeric],
        help="check the series homomorphism on one pair",
    )
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--tol", type=float, default=1e-5, help="target tolerance")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "relations", parents=[numeric], help="enumerate certified double-shuffle relations"
    )
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--min-entry", type=int, required=True)
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_relations)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, TypeError) as exc:
        # bad arguments of any kind are usage errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
