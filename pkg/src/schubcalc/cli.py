"""Command-line front end: ``schubcalc <command> ...`` or ``python3 -m schubcalc``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import verify
from .bruhat import count_I_chains, greedy_chain, interval, witness
from .cache import DiskCache
from .perm import Permutation
from .poly import SubsetDescriptor, schubert, schur, structure_constant, structure_constants
from .qorder import profile, q_interval, rank, skew_coefficient
from .tabx import partition, schensted

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def perm_arg(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def ints(text: str) -> tuple[int, ...]:
    """``2,1``, ``(2,1)``, ``21`` or an empty string."""
    s = text.strip().strip("()[]{}")
    if not s:
        return ()
    try:
        if "," in s or " " in s:
            return tuple(int(t) for t in s.replace(",", " ").split())
        return tuple(int(ch) for ch in s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a list of integers, got {text!r}") from None


def partition_arg(text: str) -> tuple[int, ...]:
    try:
        return partition(ints(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ----------------------------------------------------------------------
# commands

def cmd_poly(args):
    f = schubert(args.w)
    print(json.dumps(f.to_json()) if args.json else f)


def cmd_schur(args):
    print(schur(args.lam, args.k))


def cmd_mult(args):
    e = structure_constants(args.u, args.v)
    print(json.dumps(e.to_json()) if args.json else e)


def cmd_const(args):
    print(structure_constant(args.u, args.v, args.w))


def cmd_skewcoef(args):
    if args.k is not None and args.u is not None:
        print(skew_coefficient(args.zeta, args.lam, args.u, args.k))
    else:
        print(skew_coefficient(args.zeta, args.lam, k=args.k))


def cmd_interval(args):
    iv = interval(args.u, args.w, args.k)
    if args.dot:
        print(iv.to_dot())
    elif args.json:
        print(iv.dumps())
    else:
        _print_interval(iv)


def _print_interval(iv):
    by_rank: dict[int, list] = {}
    for v in iv.nodes:
        by_rank.setdefault(iv.rank[v], []).append(v)
    for r in sorted(by_rank):
        print(f"{r}: " + " ".join(v.oneline() for v in sorted(by_rank[r])))
    print(f"nodes {len(iv.nodes)}, covers {len(iv.covers)}, maximal chains {iv.count_maximal_chains()}")


def cmd_chains(args):
    print(count_I_chains(args.u, args.w, args.colors))


def cmd_greedy(args):
    try:
        chain = greedy_chain(args.u, args.w, args.k)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CHECK_FAILED
    for v in chain:
        print(v.oneline())


def cmd_qorder(args):
    z = args.zeta
    if args.rank or not args.interval:
        print(rank(z))
    if not args.rank and not args.interval:
        prof = profile(z)
        u, k = witness(z)
        print(f"up {sorted(prof.up)} down {sorted(prof.down)}")
        print(f"witness u={u.oneline()} k={k}")
    if args.interval:
        iv = q_interval(z)
        if args.json:
            print(iv.dumps())
        else:
            _print_interval(iv)


def cmd_rsk(args):
    P, Q = schensted(args.word)
    print(f"P {P}")
    print(f"Q {Q}")


# verify parameters are given as key=value
_PARAM_TYPES = {
    "n": int, "k": int, "l": int, "bound": int, "seed": int, "witness_n": int,
    "search_n": int, "v_n": int, "known_upto": int, "tail": str,
    "u": Permutation.parse, "w": Permutation.parse, "x": Permutation.parse,
    "z": Permutation.parse, "zeta": Permutation.parse, "eta": Permutation.parse,
    "I": ints, "P": ints,
}


def _verify_kwargs(name: str, pairs: list[str]) -> dict:
    kw = {}
    for item in pairs:
        key, sep, val = item.partition("=")
        if not sep or key not in _PARAM_TYPES:
            raise UsageError(f"bad parameter {item!r}; expected key=value with key in {sorted(_PARAM_TYPES)}")
        try:
            kw[key] = _PARAM_TYPES[key](val)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise UsageError(f"bad value for {key}: {exc}") from None
    if name == "psi_P":
        members = kw.pop("P", None)
        if members is None:
            raise UsageError("psi_P needs P=...")
        upto = kw.pop("known_upto", max(members, default=0))
        kw["P"] = SubsetDescriptor(tuple(members), upto, kw.pop("tail", "out"))
    return kw


def cmd_verify(args):
    fn = verify.CHECKERS[args.checker]
    kw = _verify_kwargs(args.checker, args.params)
    try:
        rep = fn(**kw)
    except TypeError as exc:
        raise UsageError(f"{args.checker}: {exc}") from None
    print(rep.dumps(timing=args.timing))
    print(rep.summary(), file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_CHECK_FAILED


def cmd_cache(args):
    c = DiskCache()
    if args.clear:
        print(f"removed {c.clear()} records from {c.path}")
    else:
        s = c.stats()
        print(f"{s['path']}: {s['poly']} polynomials, {s['product']} products, {s['skipped']} skipped")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubcalc", description="Schubert calculus and k-Bruhat chains.")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the on-disk cache")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("poly", help="print a Schubert polynomial")
    s.add_argument("w", type=perm_arg)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("schur", help="Schur polynomial s_lambda in k variables")
    s.add_argument("lam", type=partition_arg)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_schur)

    s = sub.add_parser("mult", help="Schubert expansion of S_u * S_v")
    s.add_argument("u", type=perm_arg)
    s.add_argument("v", type=perm_arg)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_mult)

    s = sub.add_parser("const", help="one structure constant c^w_{u,v}")
    for name in ("u", "v", "w"):
        s.add_argument(name, type=perm_arg)
    s.set_defaults(func=cmd_const)

    s = sub.add_parser("skewcoef", help="skew coefficient c^zeta_lambda")
    s.add_argument("zeta", type=perm_arg)
    s.add_argument("lam", type=partition_arg)
    s.add_argument("--k", type=int)
    s.add_argument("--u", type=perm_arg, help="explicit witness (needs --k)")
    s.set_defaults(func=cmd_skewcoef)

    s = sub.add_parser("interval", help="Bruhat or k-Bruhat interval")
    s.add_argument("u", type=perm_arg)
    s.add_argument("w", type=perm_arg)
    s.add_argument("--k", type=int)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_interval)

    s = sub.add_parser("chains", help="count chains whose labels lie in I")
    s.add_argument("u", type=perm_arg)
    s.add_argument("w", type=perm_arg)
    s.add_argument("--colors", type=ints, required=True)
    s.set_defaults(func=cmd_chains)

    s = sub.add_parser("greedy", help="greedy saturated chain from w down to u")
    s.add_argument("u", type=perm_arg)
    s.add_argument("w", type=perm_arg)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_greedy)

    s = sub.add_parser("qorder", help="rank, profile and interval in the graded order")
    s.add_argument("zeta", type=perm_arg)
    s.add_argument("--interval", action="store_true")
    s.add_argument("--rank", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_qorder)

    s = sub.add_parser("rsk", help="Schensted insertion of a word")
    s.add_argument("word", type=ints)
    s.set_defaults(func=cmd_rsk)

    s = sub.add_parser("verify", help="run a checker and print its JSON report")
    s.add_argument("checker", choices=sorted(verify.CHECKERS))
    s.add_argument("params", nargs="*", metavar="key=value")
    s.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("cache", help="inspect or clear the on-disk cache")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--clear", action="store_true")
    g.add_argument("--stats", action="store_true")
    s.set_defaults(func=cmd_cache)
    return p


def main(argv=None) -> int:
    logging.basicConfig(format="schubcalc: %(levelname)s: %(message)s", level=logging.WARNING)
    args = build_parser().parse_args(argv)
    disk = None
    if not args.no_cache and args.command != "cache":
        disk = DiskCache()
        if not disk.attach():
            disk = None
    try:
        return args.func(args) or EXIT_OK
    except (UsageError, ValueError) as exc:
        print(f"schubcalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if disk is not None:
            disk.detach()


if __name__ == "__main__":
    sys.exit(main())
