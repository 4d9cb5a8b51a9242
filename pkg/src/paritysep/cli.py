"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 unparsable arguments,
3 partition outside the relevant class or map domain.  Results go to
standard output, diagnostics to standard error.  Partitions are written in
the caret grammar (``7 5^3 1``); the empty partition is written ``empty``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classes import count_class, enumerate_class, is_member, parse_class
from .maps import MAPS, DomainError, NotInImageError, apply, get_map, invert
from .partition import Partition, format_partition, parse_partition, render_ferrers
from .verify import SUITES, run_suite, suite_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

MAP_TOKENS = tuple(m.cli_token for m in MAPS.values())


def show(lam: Partition) -> str:
    return format_partition(lam) or "empty"


def _class_arg(text: str):
    try:
        return parse_class(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _map_arg(text: str):
    try:
        return get_map(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown map {text!r}; choose from {', '.join(MAP_TOKENS)}"
        ) from None


def _weight_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("weight must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="paritysep",
        description="Partitions with parts separated by parity: counts, maps, verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="number of members of a class")
    c.add_argument("--class", dest="cls", type=_class_arg, required=True)
    c.add_argument("--n", type=_weight_arg, required=True)

    e = sub.add_parser("enumerate", help="list the members of a class")
    e.add_argument("--class", dest="cls", type=_class_arg, required=True)
    e.add_argument("--n", type=_weight_arg, required=True)
    e.add_argument("--format", choices=("text", "json"), default="text")

    for name, helptext in (("apply", "apply a map"), ("invert", "invert a map")):
        a = sub.add_parser(name, help=helptext)
        a.add_argument("--map", type=_map_arg, required=True, metavar="|".join(MAP_TOKENS))
        a.add_argument("--partition", type=_partition_arg, required=True)
        a.add_argument("--format", choices=("text", "json"), default="text")

    m = sub.add_parser("member", help="test class membership")
    m.add_argument("--class", dest="cls", type=_class_arg, required=True)
    m.add_argument("--partition", type=_partition_arg, required=True)

    v = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--nmax", type=_weight_arg, default=None)

    s = sub.add_parser("sequence", help="counts of a class for n = 0..nmax")
    s.add_argument("--class", dest="cls", type=_class_arg, required=True)
    s.add_argument("--nmax", type=_weight_arg, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")

    r = sub.add_parser("render", help="ASCII Ferrers diagram")
    r.add_argument("--partition", type=_partition_arg, required=True)
    r.add_argument("--box", default="#")
    return p


def _out(text: str = ""):
    sys.stdout.write(text + "\n")


def _cmd_apply(args) -> int:
    mu, trace = apply(args.map, args.partition)
    if args.format == "json":
        _out(json.dumps({"image": show(mu), "trace": trace.to_dict()}))
    else:
        _out(show(mu))
        _out(json.dumps(trace.to_dict()))
    return EXIT_OK


def _cmd_invert(args) -> int:
    m, mu = args.map, args.partition
    if not m.in_codomain(mu):
        raise DomainError(f"{show(mu)} is not in the codomain of {m.id} ({m.codomain.id})")
    try:
        lam = invert(m, mu)
    except NotInImageError as e:
        print(e, file=sys.stderr)
        result = None
    else:
        result = show(lam)
    if args.format == "json":
        _out(json.dumps({"preimage": result, "in_image": result is not None}))
    else:
        _out(result if result is not None else "not in image")
    return EXIT_OK


def _cmd_sequence(args) -> int:
    counts = [count_class(n, args.cls) for n in range(args.nmax + 1)]
    if args.format == "json":
        _out(json.dumps({"class": args.cls.id, "counts": counts}))
    else:
        _out("n,count")
        for n, k in enumerate(counts):
            _out(f"{n},{k}")
    return EXIT_OK


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "count":
        _out(str(count_class(args.n, args.cls)))
    elif cmd == "enumerate":
        for lam in enumerate_class(args.n, args.cls):
            _out(json.dumps(list(lam)) if args.format == "json" else show(lam))
    elif cmd == "apply":
        return _cmd_apply(args)
    elif cmd == "invert":
        return _cmd_invert(args)
    elif cmd == "member":
        _out("true" if is_member(args.partition, args.cls) else "false")
    elif cmd == "verify":
        reports = run_suite(args.suite, args.nmax)
        _out(suite_json(reports))
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    elif cmd == "sequence":
        return _cmd_sequence(args)
    elif cmd == "render":
        if args.partition:
            _out(render_ferrers(args.partition, args.box))
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return _dispatch(args)
    except DomainError as e:
        print(f"domain violation: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except BrokenPipeError:
        return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
