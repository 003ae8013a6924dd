"""Command-line interface.

Subcommands compute single integrals or cycle values, enumerate decorated
trees, print the integral table, print Bernoulli numbers, and run the exact
verification checks. Values print as reduced fractions; pass ``--decimal D``
where supported for a correctly rounded D-digit approximation, marked with a
leading ``~``. Exit codes: 0 on success or all checks passing, 1 on a
verification failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from .cutjoin import (
    UndefinedExponentError,
    canonical_key,
    cycle_value,
    load_cache,
    save_cache,
)
from .exact_arith import bernoulli, format_rational
from .hodge import hodge_integral, hodge_table
from .trees import canonical_encoding, enumerate_trees, tree_sum, tree_weight
from .verify import (
    check_bernoulli_identity,
    check_choice_independence,
    check_genus0,
    check_oracle_agreement,
    check_tree_identity,
)

__all__ = ["main"]

CHECK_NAMES = ("tree-identity", "bernoulli", "genus0", "oracle", "independence")


def _weights(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed weight list: {text!r}")
    if not parts or any(w < 1 for w in parts):
        raise argparse.ArgumentTypeError("weights must be positive integers")
    return parts


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodgetrees",
        description="Exact one-point Hodge integral calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_integral = sub.add_parser(
        "integral", help="integral of psi^(3g-2-i) lambda_i at genus g"
    )
    p_integral.add_argument("--g", type=_positive, required=True)
    p_integral.add_argument("--lambda", dest="lam", type=int, required=True)
    p_integral.add_argument("--weights", type=_weights, default=(1,))
    p_integral.add_argument("--cache", default=None)
    p_integral.add_argument("--decimal", type=_positive, default=None)

    p_cycle = sub.add_parser(
        "w", help="cycle value for a genus, lambda index and weight list"
    )
    p_cycle.add_argument("--g", type=_nonnegative, required=True)
    p_cycle.add_argument("--lambda", dest="lam", type=int, required=True)
    p_cycle.add_argument("--weights", type=_weights, required=True)
    p_cycle.add_argument("--cache", default=None)
    p_cycle.add_argument("--decimal", type=_positive, default=None)

    p_trees = sub.add_parser("trees", help="decorated tree enumeration and sums")
    trees_sub = p_trees.add_subparsers(dest="trees_command", required=True)
    p_enumerate = trees_sub.add_parser("enumerate", help="list trees with weights")
    p_enumerate.add_argument("--g", type=_nonnegative, required=True)
    p_enumerate.add_argument("--n", type=_positive, required=True)
    p_enumerate.add_argument("--format", choices=("text", "json"), default="text")
    p_sum = trees_sub.add_parser("sum", help="sum of tree weights")
    p_sum.add_argument("--g", type=_nonnegative, required=True)
    p_sum.add_argument("--n", type=_positive, required=True)
    p_sum.add_argument("--decimal", type=_positive, default=None)

    p_table = sub.add_parser("table", help="all integrals up to a genus bound")
    p_table.add_argument("--max-g", dest="max_g", type=_positive, required=True)
    p_table.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p_bernoulli = sub.add_parser("bernoulli", help="Bernoulli number B_m")
    p_bernoulli.add_argument("--m", type=_nonnegative, required=True)
    p_bernoulli.add_argument("--decimal", type=_positive, default=None)

    p_verify = sub.add_parser("verify", help="run exact consistency checks")
    p_verify.add_argument(
        "--check", choices=CHECK_NAMES + ("all",), required=True
    )
    p_verify.add_argument("--max-g", dest="max_g", type=_positive, default=None)
    p_verify.add_argument("--max-n", dest="max_n", type=_positive, default=None)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _value_text(value: Fraction, decimal_digits: int | None) -> str:
    if decimal_digits is None:
        return format_rational(value)
    with localcontext() as ctx:
        ctx.prec = decimal_digits
        approx = Decimal(value.numerator) / Decimal(value.denominator)
    return f"~{approx}"


def _with_cache(args, compute) -> Fraction:
    cache = {}
    if args.cache and os.path.exists(args.cache):
        cache = load_cache(args.cache)
    value = compute(cache)
    if args.cache:
        save_cache(cache, args.cache)
    return value


def _run_verify(args) -> int:
    selected = CHECK_NAMES if args.check == "all" else (args.check,)
    reports = []
    for name in selected:
        if name == "tree-identity":
            reports.append(check_tree_identity(args.max_g or 3, args.max_n or 5))
        elif name == "bernoulli":
            reports.append(check_bernoulli_identity(args.max_g or 3, args.max_n or 3))
        elif name == "genus0":
            reports.append(check_genus0(args.max_n or 9))
        elif name == "oracle":
            reports.append(check_oracle_agreement(args.max_g or 6))
        elif name == "independence":
            reports.append(check_choice_independence(args.max_g or 3))
    if args.format == "json":
        payload = [r.to_json_obj() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload))
    else:
        for report in reports:
            print(report.render_text())
    return 0 if all(r.passed for r in reports) else 1


def _run_trees(args) -> int:
    if args.trees_command == "sum":
        print(_value_text(tree_sum(args.g, args.n), args.decimal))
        return 0
    listed = enumerate_trees(args.g, args.n)
    rows = [
        (canonical_encoding(t), format_rational(tree_weight(t))) for t in listed
    ]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "g": args.g,
                    "n": args.n,
                    "count": len(rows),
                    "sum": format_rational(tree_sum(args.g, args.n)),
                    "trees": [{"encoding": e, "weight": w} for e, w in rows],
                }
            )
        )
    else:
        print(f"count {len(rows)}")
        for encoding, weight in rows:
            print(f"{encoding}\t{weight}")
    return 0


def _run_table(args) -> int:
    rows = hodge_table(args.max_g)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "g": g,
                        "i": i,
                        "psi_power": 3 * g - 2 - i,
                        "integral": format_rational(value),
                    }
                    for g, i, value in rows
                ]
            )
        )
    else:
        print("g\ti\tpsi_power\tintegral")
        for g, i, value in rows:
            print(f"{g}\t{i}\t{3 * g - 2 - i}\t{format_rational(value)}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "integral":
            value = _with_cache(
                args,
                lambda cache: hodge_integral(args.g, args.lam, args.weights, cache),
            )
            print(_value_text(value, args.decimal))
            return 0
        if args.command == "w":
            value = _with_cache(
                args,
                lambda cache: cycle_value(
                    canonical_key(args.g, args.lam, args.weights), cache
                ),
            )
            print(_value_text(value, args.decimal))
            return 0
        if args.command == "trees":
            return _run_trees(args)
        if args.command == "table":
            return _run_table(args)
        if args.command == "bernoulli":
            print(_value_text(bernoulli(args.m), args.decimal))
            return 0
        if args.command == "verify":
            return _run_verify(args)
    except (UndefinedExponentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable subcommand")


if __name__ == "__main__":
    sys.exit(main())
