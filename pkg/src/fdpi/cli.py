"""Command line front end.

Exit codes: 0 success, 2 invalid parameters, 3 non-prime ``p``,
4 domain precondition failure.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from .combination import DecomposeKind, combine, decompose
from .divisibility import PrincipalIdeal, combine_divisors, divides_biquad, is_exceptional
from .errors import InvalidIdealError, InvalidParameterError, NotPrimeError, PreconditionError
from .fields import (
    FdpIdeal,
    QuadraticField,
    check_prime,
    fdpi_biquadratic,
    fdpi_quadratic,
    make_biquadratic,
)
from .scan import MAX_PMAX, scan, write_rows

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_PRIME = 3
EXIT_PRECONDITION = 4


class UsageError(InvalidParameterError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("-" + n for n in missing))


def _ideal(r: int, p: int) -> FdpIdeal:
    check_prime(p)
    return FdpIdeal.reduce(r, p)


def cmd_ideals(args) -> str:
    _require(args, "p")
    if args.quad:
        if (args.a is None) == (args.b is None):
            raise UsageError("--quad needs exactly one of -a or -b")
        field = QuadraticField(args.a if args.a is not None else args.b)
        ideals = fdpi_quadratic(field, args.p)
    else:
        _require(args, "a", "b")
        ideals = fdpi_biquadratic(make_biquadratic(args.a, args.b), args.p)
    return _dump([i.r for i in ideals])


def cmd_combine(args) -> str:
    _require(args, "a", "b", "p", "r", "s")
    field = make_biquadratic(args.a, args.b)
    tc = combine(field, _ideal(args.r, args.p), _ideal(args.s, args.p))
    return _dump({"t": tc.r})


def cmd_decompose(args) -> str:
    _require(args, "a", "b", "p", "t")
    field = make_biquadratic(args.a, args.b)
    outcome = decompose(field, _ideal(args.t, args.p))
    if outcome.kind is DecomposeKind.UNIQUE:
        ra, sb = outcome.pair
        return _dump({"kind": "unique", "r": ra.r, "s": sb.r})
    info = outcome.zero_info
    return _dump(
        {"kind": "zero_case", "nu": info.nu, "pairs": [[ra.r, sb.r] for ra, sb in info.pairs]}
    )


def cmd_divides(args) -> str:
    _require(args, "a", "b", "p", "n", "m")
    I = PrincipalIdeal(args.n, args.m, make_biquadratic(args.a, args.b))
    if args.r is not None or args.s is not None:
        _require(args, "r", "s")
        out = combine_divisors(I, _ideal(args.r, args.p), _ideal(args.s, args.p))
        return _dump(
            {"t": out.ideal.r, "divides": out.divides, "exceptional": out.exceptional}
        )
    _require(args, "t")
    tc = _ideal(args.t, args.p)
    return _dump(
        {"divides": divides_biquad(I, tc), "exceptional": is_exceptional(tc.p, I.n, tc.r)}
    )


def _jobs(args) -> int:
    if args.jobs is not None:
        jobs = args.jobs
    else:
        try:
            jobs = int(os.environ.get("FDPI_JOBS", "1"))
        except ValueError:
            raise UsageError("FDPI_JOBS must be an integer") from None
    if jobs < 1:
        raise UsageError(f"--jobs must be positive, got {jobs}")
    return jobs


def cmd_scan(args, out) -> None:
    _require(args, "a", "b", "pmax")
    if args.pmax > MAX_PMAX:
        raise UsageError("--pmax must not exceed 2**40")
    if (args.n is None) != (args.m is None):
        raise UsageError("-n and -m must be given together")
    field = make_biquadratic(args.a, args.b)
    if args.n is not None:
        PrincipalIdeal(args.n, args.m, field)
    rows = scan(field.a, field.b, args.pmax, args.n, args.m, jobs=_jobs(args))
    write_rows(rows, out, args.format or "jsonl")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    kind = common.add_mutually_exclusive_group()
    kind.add_argument("--quad", action="store_true", help="quadratic ring Z[alpha]")
    kind.add_argument("--biquad", action="store_true", help="biquadratic ring Z[gamma] (default)")
    for flag in "abprstnm":
        common.add_argument(f"-{flag}", type=int)
    common.add_argument("--pmax", type=int)
    common.add_argument("--format", choices=("json", "jsonl", "csv"))
    common.add_argument("--jobs", type=int, help="worker processes (env FDPI_JOBS)")
    common.add_argument("--output", metavar="PATH", help="write here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="fdpi",
        description="First-degree prime ideals of biquadratic fields Z[alpha + beta].",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ideals", parents=[common], help="list first-degree prime ideals of norm p")
    sub.add_parser("combine", parents=[common], help="combine (r,p) and (s,p) into (r+s,p)")
    sub.add_parser("decompose", parents=[common], help="recover the source pair of (t,p)")
    sub.add_parser("divides", parents=[common], help="divisibility of <n + m*gamma>")
    sub.add_parser("scan", parents=[common], help="factor-base table for all p <= pmax")
    return parser


_COMMANDS = {
    "ideals": cmd_ideals,
    "combine": cmd_combine,
    "decompose": cmd_decompose,
    "divides": cmd_divides,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            out = sys.stdout
            if args.output:
                out = stack.enter_context(open(args.output, "w", encoding="utf-8", newline=""))
            if args.command == "scan":
                cmd_scan(args, out)
            else:
                out.write(_COMMANDS[args.command](args) + "\n")
    except NotPrimeError as exc:
        print(f"fdpi: {exc}", file=sys.stderr)
        return EXIT_NOT_PRIME
    except (InvalidIdealError, PreconditionError) as exc:
        print(f"fdpi: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvalidParameterError, ValueError) as exc:
        print(f"fdpi: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
