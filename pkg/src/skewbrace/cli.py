"""Command line interface.

Exit status: 0 success / true, 1 mathematical negative (false, absent,
not supersoluble, failed check), 2 malformed input.
"""
import argparse
import json
import sys
from pathlib import Path

from . import errors
from ._arith import isprime
from .brace import opposite
from .catalog import small_group, small_group_catalog
from .enumeration import braces_on_group, write_corpus
from .io import format_brace, load_brace
from .structure import (
    brace_is_supersoluble,
    hall_subbrace_bruteforce,
    hall_subbrace_constructive,
    sylow_subbrace_constructive,
    verify_theorems,
)

SCHEMA = "skewbrace/1"


class _Usage(Exception):
    pass


def _fmt(S):
    return "{" + ", ".join(str(x) for x in S) + "}"


def _emit(args, text, record):
    if args.format == "structured":
        print(json.dumps({"schema": SCHEMA, "command": args.command, **record}, indent=2))
    elif text:
        print(text)


def _load(path):
    return load_brace(path)


def _primes(text):
    try:
        ps = sorted({int(v) for v in text.replace(" ", "").split(",") if v})
    except ValueError:
        raise _Usage(f"bad prime list {text!r}") from None
    if not ps or not all(isprime(p) for p in ps):
        raise _Usage(f"not a list of primes: {text!r}")
    return ps


def _subbrace(args, B, primes, label):
    if args.brute_force:
        S = hall_subbrace_bruteforce(B, primes)
        trace = None
    else:
        if not brace_is_supersoluble(B):
            _emit(args, "not supersoluble", {"primes": primes, "result": None, "supersoluble": False})
            return 1
        if label == "sylow":
            res = sylow_subbrace_constructive(B, primes[0])
        else:
            res = hall_subbrace_constructive(B, primes)
        S, trace = res.result, res.trace
    record = {"primes": primes, "result": list(S) if S is not None else None,
              "method": "brute-force" if args.brute_force else "constructive"}
    text = _fmt(S) if S is not None else "none"
    if args.trace and trace is not None:
        record["trace"] = trace.records()
        text += "\n" + trace.to_text()
    _emit(args, text, record)
    return 0 if S is not None else 1


def cmd_verify(args):
    B = _load(args.file)
    _emit(args, f"valid skew brace of order {B.order}", {"valid": True, "order": B.order})
    return 0


def cmd_sylow(args):
    if not isprime(args.p):
        raise _Usage(f"{args.p} is not prime")
    B = _load(args.file)
    if B.order % args.p:
        raise _Usage(f"{args.p} does not divide the order {B.order}")
    return _subbrace(args, B, [args.p], "sylow")


def cmd_hall(args):
    primes = _primes(args.primes)
    return _subbrace(args, _load(args.file), primes, "hall")


def cmd_supersoluble(args):
    sup = brace_is_supersoluble(_load(args.file))
    _emit(args, "true" if sup else "false", {"supersoluble": sup})
    return 0 if sup else 1


def cmd_opposite(args):
    B = opposite(_load(args.file))
    text = format_brace(B).rstrip("\n")
    _emit(args, text, {"add": B.add.rows, "mul": B.mul.rows})
    return 0


def cmd_enumerate(args):
    try:
        groups = [small_group(args.group)] if args.group else list(small_group_catalog(args.order))
    except errors.UnsupportedOrder as e:
        raise _Usage(str(e)) from None
    if args.group and args.order is not None and groups[0].order != args.order:
        raise _Usage(f"{args.group} has order {groups[0].order}, not {args.order}")
    rows = []
    for G in groups:
        rows.append({"group": G.name, "order": G.order, "braces": len(braces_on_group(G))})
    text = "\n".join(f"{r['group']}: {r['braces']} skew braces" for r in rows)
    _emit(args, text, {"groups": rows})
    return 0


def _brace_files(paths):
    out = []
    for p in map(Path, paths):
        out.extend(sorted(p.glob("*.brace")) if p.is_dir() else [p])
    return out


def cmd_check_theorems(args):
    reports = []
    for path in _brace_files(args.files):
        B = _load(path)
        B.name = path.stem
        reports.append(verify_theorems(B))
    ok = all(r.ok for r in reports)
    text = "\n".join(r.to_text() for r in reports)
    if len(reports) > 1:
        failed = sum(not r.ok for r in reports)
        text += f"\n{len(reports)} braces checked, {failed} with failures"
    _emit(args, text, {"ok": ok, "reports": [r.records() for r in reports]})
    return 0 if ok else 1


def cmd_corpus(args):
    paths = write_corpus(args.max_order, args.out)
    _emit(args, f"wrote {len(paths)} brace files to {args.out}",
          {"count": len(paths), "files": [p.name for p in paths]})
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default=argparse.SUPPRESS)
    common.add_argument("--trace", action="store_true", default=argparse.SUPPRESS,
                        help="print the proof trace of constructive computations")
    common.add_argument("--brute-force", action="store_true", default=argparse.SUPPRESS,
                        help="use exhaustive search instead of the constructive algorithm")

    parser = argparse.ArgumentParser(prog="skewbrace", parents=[common],
                                     description="Finite skew braces from Cayley tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="validate a brace file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sylow", parents=[common], help="a Sylow p-sub-skew brace")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_sylow)

    p = sub.add_parser("hall", parents=[common], help="a Hall pi-sub-skew brace")
    p.add_argument("--primes", required=True, help="comma separated, e.g. 2,5")
    p.add_argument("file")
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("supersoluble", parents=[common], help="test supersolubility")
    p.add_argument("file")
    p.set_defaults(func=cmd_supersoluble)

    p = sub.add_parser("opposite", parents=[common], help="print the opposite brace")
    p.add_argument("file")
    p.set_defaults(func=cmd_opposite)

    p = sub.add_parser("enumerate", parents=[common], help="count braces on catalog groups")
    p.add_argument("--order", type=int)
    p.add_argument("--group")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check-theorems", parents=[common],
                       help="verify the Sylow/Hall theorems on brace files or directories")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_check_theorems)

    p = sub.add_parser("corpus", parents=[common], help="write the enumerated corpus")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "text"), ("trace", False), ("brute_force", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.command == "enumerate" and args.order is None and args.group is None:
        parser.error("enumerate needs --order or --group")
    try:
        return args.func(args)
    except errors.ValidationError as e:
        witness = f" witness {e.witness}" if e.witness else ""
        print(f"error: {e.kind}: {e}{witness}", file=sys.stderr)
        return 2
    except (_Usage, errors.UnsupportedOrder, errors.TooLarge, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def run(argv=None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
