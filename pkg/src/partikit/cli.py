"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 precondition violation,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .bench import run_bench
from .checks import FAIL, all_ok, run_checks
from .errors import InternalConsistencyError, PartikitError, PreconditionError
from .exact import lcm_vec
from .fdsums import FDSumSpec, fd_sum
from .partition import (
    box_count,
    default_box_guard,
    dp_count,
    new_weight_system,
    polynomial_part,
    quasi_build,
    quasi_eval,
)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    if text == "":
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _weight_system(args):
    lcm_vec(args.weights)
    return new_weight_system(args.weights, box_guard=args.box_guard)


def cmd_count(args) -> int:
    if args.method == "dp":
        lcm_vec(args.weights)
        count = dp_count(args.weights, args.n)
    elif args.method == "box":
        count = box_count(_weight_system(args), args.n)
    else:
        count = quasi_eval(quasi_build(_weight_system(args)), args.n)
    if args.format == "json":
        print(_dump({"weights": args.weights, "n": args.n, "method": args.method, "count": str(count)}))
    else:
        print(count)
    return EXIT_OK


def cmd_poly(args) -> int:
    poly = polynomial_part(_weight_system(args))
    print(_dump(poly.to_json()) if args.format == "json" else poly.format())
    return EXIT_OK


def cmd_constituents(args) -> int:
    qp = quasi_build(_weight_system(args))
    if args.format == "json":
        print(_dump(qp.to_json()))
    else:
        for k, q in enumerate(qp.constituents):
            print(f"k={k}: {q.format()}")
    return EXIT_OK


def cmd_fdsum(args) -> int:
    spec = FDSumSpec(tuple(args.args), args.b, args.n)
    value = fd_sum(spec)
    print(_dump(spec.to_json(value)) if args.format == "json" else spec.to_json(value)["value"])
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.nmax < 0:
        raise PreconditionError(f"--nmax must be nonnegative, got {args.nmax}")
    ws = _weight_system(args)
    results = run_checks(ws, args.nmax)
    ok = all_ok(results)
    if args.format == "json":
        print(_dump({"weights": args.weights, "nmax": args.nmax, "passed": ok, "checks": [r.to_json() for r in results]}))
    else:
        for r in results:
            print(f"{r.status.upper():4} {r.name}: {r.detail}")
            if r.status == FAIL and r.counterexample:
                print("     counterexample: " + " ".join(f"{k}={v}" for k, v in r.counterexample.items()))
        print("all checks passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_bench(args) -> int:
    if args.nmax < 0:
        raise PreconditionError(f"--nmax must be nonnegative, got {args.nmax}")
    lcm_vec(args.weights)
    report = run_bench(args.weights, args.nmax, box_guard=args.box_guard)
    if args.format == "csv":
        print(report.to_csv())
    elif args.format == "json":
        print(_dump(report.to_json()))
    else:
        print(report.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partikit", description="Exact restricted partition counts and Fourier-Dedekind sums.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def weighted(name, help, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("--weights", type=_int_list, required=True, help="comma-separated weights, e.g. 2,3")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument(
            "--box-guard",
            type=_positive_int,
            default=None,
            help="warn when the index box exceeds this many points (default: $PARTIKIT_BOX_GUARD or 10^8)",
        )
        return p

    p = weighted("count", "count partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("dp", "box", "quasi"), default="dp")
    p.set_defaults(func=cmd_count)

    weighted("poly", "print the polynomial part").set_defaults(func=cmd_poly)
    weighted("constituents", "print every constituent polynomial").set_defaults(func=cmd_constituents)

    p = sub.add_parser("fdsum", help="evaluate a Fourier-Dedekind sum s_n(args; b)")
    p.add_argument("--args", type=_int_list, required=True, help="comma-separated a_1,...,a_m (may be empty)")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_fdsum)

    p = weighted("verify", "run the self-check suite")
    p.add_argument("--nmax", type=int, default=1000)
    p.set_defaults(func=cmd_verify)

    p = weighted("bench", "time the three evaluators", formats=("text", "csv", "json"))
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "box_guard") and args.box_guard is None:
        try:
            args.box_guard = default_box_guard()
        except ValueError as exc:
            print(f"partikit: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"partikit: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except PartikitError as exc:
        print(f"partikit: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def run() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(main())


if __name__ == "__main__":
    run()
