"""Command-line front end.

Subcommands: enum, rank, compare, near, hasse, verify.  Exit codes:
0 on success or a passing suite, 1 on suite failure, 2 on usage errors
(including malformed involutions and out-of-bound sizes).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BorbitsError
from .involutions import (
    enumerate_involutions,
    format_involution,
    involution_to_json,
    parse_involution,
    to_permutation,
)
from .moves import near, near_prime
from .rankorder import (
    bruhat_rank_matrix,
    leq_bruhat,
    leq_melnikov,
    leq_star,
    melnikov_rank_matrix,
    star_rank_matrix,
)
from .suites import emit_hasse, run_suite, suite_names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borbits",
        description="Exact combinatorics of orbit degenerations on involutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enum", help="list all involutions of S_n")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--format", choices=("text", "json"), default="text")

    rank = sub.add_parser("rank", help="print a rank matrix of an involution")
    rank.add_argument("--n", type=int, required=True)
    rank.add_argument("--sigma", required=True, help="cycle notation, e.g. (3,1)(5,2)")
    rank.add_argument(
        "--order",
        choices=("melnikov", "star", "bruhat"),
        default="melnikov",
        help="which rank matrix to print",
    )
    rank.add_argument(
        "--star",
        action="store_true",
        help="shortcut for --order star",
    )
    rank.add_argument("--format", choices=("text", "json"), default="text")

    compare = sub.add_parser("compare", help="compare two involutions in one order")
    compare.add_argument("--n", type=int, required=True)
    compare.add_argument("--sigma", required=True)
    compare.add_argument("--tau", required=True)
    compare.add_argument(
        "--order", choices=("star", "melnikov", "bruhat"), default="star"
    )
    compare.add_argument("--format", choices=("text", "json"), default="text")

    near_cmd = sub.add_parser("near", help="list the move neighbours of an involution")
    near_cmd.add_argument("--n", type=int, required=True)
    near_cmd.add_argument("--sigma", required=True)
    near_cmd.add_argument(
        "--prime",
        action="store_true",
        help="restricted neighbour set (equals the covering set)",
    )
    near_cmd.add_argument("--format", choices=("text", "json"), default="text")

    hasse = sub.add_parser("hasse", help="render the covering diagram")
    hasse.add_argument("--n", type=int, required=True)
    hasse.add_argument(
        "--order", choices=("star", "melnikov", "bruhat"), default="star"
    )
    hasse.add_argument("--format", choices=("dot", "json"), default="dot")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=suite_names())
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=100)
    verify.add_argument(
        "--explore",
        action="store_true",
        help="closure suite: report order-unrelated variety members",
    )
    verify.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _rank_rows_text(rows) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in rows) + "\n"


def _cmd_enum(args) -> int:
    elements = enumerate_involutions(args.n)
    if args.format == "json":
        payload = {
            "n": args.n,
            "count": len(elements),
            "involutions": [involution_to_json(s) for s in elements],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for sigma in elements:
            print(format_involution(sigma))
    return 0


def _cmd_rank(args) -> int:
    sigma = parse_involution(args.sigma, args.n)
    order = "star" if args.star else args.order
    if order == "star":
        matrix = star_rank_matrix(sigma)
    elif order == "melnikov":
        matrix = melnikov_rank_matrix(sigma)
    else:
        matrix = bruhat_rank_matrix(to_permutation(sigma))
    if args.format == "json":
        print(json.dumps(matrix.to_json(), sort_keys=True))
    else:
        sys.stdout.write(_rank_rows_text(matrix.rows))
    return 0


def _cmd_compare(args) -> int:
    sigma = parse_involution(args.sigma, args.n)
    tau = parse_involution(args.tau, args.n)
    if args.order == "star":
        result = leq_star(tau, sigma)
    elif args.order == "melnikov":
        result = leq_melnikov(tau, sigma)
    else:
        result = leq_bruhat(to_permutation(tau), to_permutation(sigma))
    if args.format == "json":
        payload = {
            "order": args.order,
            "sigma": format_involution(sigma),
            "tau": format_involution(tau),
            "tau_leq_sigma": result,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"tau <= sigma: {str(result).lower()}")
    return 0


def _cmd_near(args) -> int:
    sigma = parse_involution(args.sigma, args.n)
    neighbours = near_prime(sigma) if args.prime else near(sigma)
    names = sorted(format_involution(t) for t in neighbours)
    if args.format == "json":
        payload = {
            "sigma": format_involution(sigma),
            "prime": args.prime,
            "near": names,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for name in names:
            print(name)
    return 0


def _cmd_hasse(args) -> int:
    sys.stdout.write(emit_hasse(args.n, args.order, args.format))
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(
        args.suite, args.n, seed=args.seed, samples=args.samples, explore=args.explore
    )
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.passed else 1


_COMMANDS = {
    "enum": _cmd_enum,
    "rank": _cmd_rank,
    "compare": _cmd_compare,
    "near": _cmd_near,
    "hasse": _cmd_hasse,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except BorbitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
