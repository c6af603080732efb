"""Command-line entry point.

Exit codes: 0 success, 1 malformed input, 2 verification failure,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import chains as ch
from . import pieri
from .basis import grothendieck_polynomial, schubert_polynomial
from .errors import InvariantError
from .grassmannian import Partition, grassmannian_pieri_col, grassmannian_pieri_row
from .perm import parse_permutation
from .poly import format_polynomial
from .verify import format_table, run_verification

AMBIENT_ENV = "GROTHPIERI_AMBIENT"

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _perm(text: str):
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _poly_json(w, f) -> dict:
    return {
        "perm": list(w.padded(max(w.rank, 1))),
        "terms": [{"exponents": list(e), "coeff": c} for e, c in f.sorted_terms()],
    }


def _default_ambient():
    raw = os.environ.get(AMBIENT_ENV)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{AMBIENT_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--ambient", type=int, default=argparse.SUPPRESS,
                        help="largest position a chain may touch")

    parser = _Parser(prog="grothpieri", description="Pieri-type products of Grothendieck polynomials.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--ambient", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("groth", parents=[common], help="print the Grothendieck polynomial G_w")
    p.add_argument("perm", type=_perm)
    p = sub.add_parser("schub", parents=[common], help="print the Schubert polynomial S_w")
    p.add_argument("perm", type=_perm)

    p = sub.add_parser("product", parents=[common], help="expand G_v times a special class")
    p.add_argument("--v", type=_perm, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=("e", "h"), default="e")
    p.add_argument("--method", choices=("chains", "compressed", "oracle"), default="chains")

    p = sub.add_parser("chains", parents=[common], help="list Pieri chains")
    p.add_argument("--v", type=_perm, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=("e", "h"), default="e")
    p.add_argument("--w", type=_perm, default=None, help="only chains ending at w")

    p = sub.add_parser("unique", parents=[common], help="the (P0,P1) chain from v to w")
    p.add_argument("--v", type=_perm, required=True)
    p.add_argument("--w", type=_perm, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("grassmannian", parents=[common], help="strip rule on partitions")
    p.add_argument("--lambda", dest="lam", default="[]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--rule", choices=("row", "col"), default="row")

    p = sub.add_parser("verify", parents=[common], help="check every formula against brute force")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _cmd_poly(args, out) -> int:
    f = grothendieck_polynomial(args.perm) if args.command == "groth" else schubert_polynomial(args.perm)
    out.write((_dump(_poly_json(args.perm, f)) if args.format == "json" else format_polynomial(f)) + "\n")
    return EXIT_OK


def _cmd_product(args, out) -> int:
    exp = pieri.product(args.v, args.k, args.p, args.cls, args.method, args.ambient)
    if args.format == "json":
        out.write(_dump(exp.to_json_obj()) + "\n")
    else:
        for w, c in exp.items():
            out.write(f"{c:+d} {w.digits()}\n")
    return EXIT_OK


def _cmd_chains(args, out) -> int:
    if args.cls == "e":
        found = ch.enumerate_pieri_chains(args.v, args.k, args.p, args.ambient)
    else:
        found = ch.enumerate_dual_pieri_chains(args.v, args.k, args.p, args.ambient)
    if args.w is not None:
        found = [c for c in found if c.end == args.w]
    found.sort(key=lambda c: (c.end.sort_key(), c.labels, c.marks))
    if args.format == "json":
        out.write(_dump({"chains": [c.to_json_obj() for c in found]}) + "\n")
    else:
        for c in found:
            out.write(f"{c.signed():+d} {c}\n")
    return EXIT_OK


def _cmd_unique(args, out) -> int:
    c = ch.unique_chain(args.v, args.w, args.k)
    if args.format == "json":
        out.write(_dump({"chain": None if c is None else c.to_json_obj()}) + "\n")
    else:
        out.write(("no (P0,P1) chain" if c is None else str(c)) + "\n")
    return EXIT_OK


def _cmd_grassmannian(args, out) -> int:
    lam = Partition.parse(args.lam)
    rule = grassmannian_pieri_row if args.rule == "row" else grassmannian_pieri_col
    table = rule(lam, args.k, args.p)
    items = sorted(table.items(), key=lambda kv: (kv[0].weight, tuple(kv[0])))
    if args.format == "json":
        out.write(_dump({"terms": [{"partition": list(mu), "coeff": c} for mu, c in items]}) + "\n")
    else:
        for mu, c in items:
            out.write(f"{c:+d} {mu!r}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    reports = run_verification(args.nmax, workers=args.workers)
    if args.format == "json":
        for r in reports:
            out.write(_dump(r.to_json_obj()) + "\n")
    else:
        out.write(format_table(reports) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY


COMMANDS = {
    "groth": _cmd_poly,
    "schub": _cmd_poly,
    "product": _cmd_product,
    "chains": _cmd_chains,
    "unique": _cmd_unique,
    "grassmannian": _cmd_grassmannian,
    "verify": _cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.ambient is None:
            args.ambient = _default_ambient()
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except InvariantError as exc:
        err.write(f"invariant breach: {exc}\n")
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
