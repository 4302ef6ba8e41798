"""Command-line front end.

Vectors are given either as a path to a file (one component per line, ``#``
comments allowed) or inline as ``0.6,0.2,0.2``.  Components may be decimals or
``p/q`` fractions; both are read exactly.

Every subcommand prints one JSON report.  Exact values appear as ``"p/q"``
strings; the ``decimal`` fields are for display only.  Exit status: 0 for an
affirmative verdict, 1 for a negative one, 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import __version__
from .catalysis import (
    PreconditionError,
    is_partial_catalyst,
    pcon_predicate,
)
from .ratvec import ProbVec, normalize, sort_desc, y_lambda
from .search import decide_k_dim, grid_oracle, min_catalyst_dimension
from .structure import (
    Status,
    t_boundary_classify,
    t_equals_s,
    t_k_membership,
)
from .transform import max_prob, s_extreme_points, s_membership, transform_report

EXIT_YES, EXIT_NO, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def parse_components(text: str) -> list[Fraction]:
    out = []
    for raw in text.replace(",", "\n").splitlines():
        item = raw.split("#", 1)[0].strip()
        if not item:
            continue
        try:
            value = Fraction(item)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse component {item!r}") from exc
        if value < 0:
            raise InputError(f"negative component {item}")
        out.append(value)
    if not out:
        raise InputError("empty vector")
    return out


def load_vector(spec: str, unnormalized: bool = False, label: str = "vector") -> ProbVec:
    """Read a vector from a file path or an inline comma-separated list."""
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = spec
    comps = parse_components(text)
    v = ProbVec(comps)
    if not v.normalized:
        if not unnormalized:
            raise InputError(f"{label} sums to {v.total}, not 1 (pass --unnormalized to rescale)")
        if v.total == 0:
            raise InputError(f"{label} is zero")
        v = normalize(v)
    return v


def exact(q: Optional[Fraction]) -> Optional[str]:
    if q is None:
        return None
    return f"{q.numerator}/{q.denominator}"


class Reporter:
    def __init__(self, args: argparse.Namespace):
        self.digits = args.digits
        self.doc: dict[str, Any] = {
            "tool": "partcat",
            "version": __version__,
            "command": args.command,
            "argv": list(args.argv),
            "inputs": {},
        }
        self.start = time.perf_counter()

    def num(self, q: Optional[Fraction]) -> Optional[dict[str, str]]:
        if q is None:
            return None
        dec = f"{q.numerator / q.denominator:.{self.digits}f}"
        return {"exact": exact(q), "decimal": dec, "decimal_is_exact": Fraction(dec) == q}

    def vector(self, v: Sequence[Fraction]) -> list[str]:
        return [exact(c) for c in v]

    def add_input(self, name: str, v: ProbVec) -> None:
        canon = ",".join(self.vector(v))
        self.doc["inputs"][name] = {
            "sorted": self.vector(sort_desc(v)),
            "sha256": hashlib.sha256(canon.encode()).hexdigest()[:16],
        }

    def emit(self, quiet: bool, out=None) -> None:
        self.doc["elapsed_s"] = round(time.perf_counter() - self.start, 6)
        if not quiet:
            json.dump(self.doc, out or sys.stdout, indent=2)
            (out or sys.stdout).write("\n")


def cmd_prob(args, rep: Reporter) -> int:
    x = load_vector(args.x, args.unnormalized, "x")
    y = load_vector(args.y, args.unnormalized, "y")
    rep.add_input("x", x)
    rep.add_input("y", y)
    tr = transform_report(x, y)
    rep.doc.update(
        p=rep.num(tr.p),
        critical_set=list(tr.argmin_indices.indices),
        endpoint_ratio=rep.num(tr.endpoint) if tr.endpoint is not None else "inf",
        deterministic=tr.deterministic,
        partial_catalyst_exists=tr.catalysable,
    )
    return EXIT_YES


def cmd_check(args, rep: Reporter) -> int:
    x = load_vector(args.x, args.unnormalized, "x")
    y = load_vector(args.y, args.unnormalized, "y")
    c = load_vector(args.c, args.unnormalized, "c")
    if any(v <= 0 for v in c):
        raise InputError("catalyst must be strictly positive")
    for name, v in (("x", x), ("y", y), ("c", c)):
        rep.add_input(name, v)
    verdict = is_partial_catalyst(x, y, c)
    rep.doc.update(
        p_without=rep.num(verdict.p_without),
        p_with=rep.num(verdict.p_with),
        is_partial=verdict.is_partial,
    )
    try:
        pv = pcon_predicate(x, y, c)
    except PreconditionError as exc:
        rep.doc["pcon"] = {"applicable": False, "reason": str(exc)}
    else:
        rep.doc["pcon"] = {
            "applicable": True,
            "is_partial": pv.is_partial,
            "blocking_tuple": list(pv.blocking_tuple) if pv.blocking_tuple else None,
        }
    return EXIT_YES if verdict.is_partial else EXIT_NO


def _verified(rep: Reporter, x, y, c) -> dict:
    v = is_partial_catalyst(x, y, c)
    if not v.is_partial:
        raise AssertionError(f"refusing to print unverified witness {c}")
    return {"vector": rep.vector(c), "p_with": rep.num(v.p_with)}


def cmd_find(args, rep: Reporter) -> int:
    x = load_vector(args.x, args.unnormalized, "x")
    y = load_vector(args.y, args.unnormalized, "y")
    rep.add_input("x", x)
    rep.add_input("y", y)
    tr = transform_report(x, y)
    rep.doc["p_without"] = rep.num(tr.p)
    if not tr.catalysable:
        rep.doc["exists"] = False
        rep.doc["reason"] = "P(x->y) is not below min(x_n/y_n, 1)"
        return EXIT_NO
    if args.grid is not None:
        k = args.k or 2
        found = grid_oracle(x, y, k, args.grid)
        rep.doc.update(
            mode="grid", k=k, D=args.grid, count=len(found),
            catalysts=[_verified(rep, x, y, c) for c in found],
        )
        return EXIT_YES if found else EXIT_NO
    if args.min_dim:
        res = min_catalyst_dimension(x, y)
        mode = "min-dim"
    elif args.k:
        res = decide_k_dim(x, y, args.k)
        mode = "k"
    else:
        raise InputError("find needs one of --k, --min-dim or --grid")
    rep.doc.update(mode=mode, exists=res.exists, dimension=res.dimension)
    if res.exists:
        rep.doc["witness"] = _verified(rep, x, y, res.witness)
    return EXIT_YES if res.exists else EXIT_NO


def cmd_set(args, rep: Reporter) -> int:
    y = load_vector(args.y, args.unnormalized, "y")
    lam = Fraction(args.lam)
    rep.add_input("y", y)
    rep.doc["lambda"] = rep.num(lam)
    op = args.op
    if op == "extremes":
        pts = s_extreme_points(y, lam)
        rep.doc.update(y_lambda=rep.vector(y_lambda(y, lam)), count=len(pts),
                       extreme_points=[rep.vector(p) for p in pts])
        return EXIT_YES
    if op == "equals-s":
        eq = t_equals_s(y, lam)
        rep.doc["t_equals_s"] = eq
        return EXIT_YES if eq else EXIT_NO
    if args.x is None:
        raise InputError(f"--op {op} needs --x")
    x = load_vector(args.x, args.unnormalized, "x")
    rep.add_input("x", x)
    if op == "boundary":
        if args.c is None:
            raise InputError("--op boundary needs a certificate catalyst (--c)")
        c = load_vector(args.c, args.unnormalized, "c")
        rep.add_input("c", c)
        try:
            status = t_boundary_classify(x, y, lam, c)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        rep.doc["classification"] = status.value
        return EXIT_YES if status is Status.BOUNDARY else EXIT_NO
    verdict = t_k_membership(x, y, lam, args.k, args.grid)
    rep.doc.update(
        status=verdict.status.value,
        k=args.k,
        D=args.grid,
        certificate=rep.vector(verdict.certificate) if verdict.certificate else None,
        p_with=rep.num(verdict.p_with),
        in_s=s_membership(x, y, lam),
    )
    return EXIT_YES if verdict.status is Status.MEMBER else EXIT_NO


def simplex_rows(y: ProbVec, lam: Fraction, R: int, which: str, k: int, D: int):
    """Rows ``(x1, x2, x3, s_member[, tk_member])`` over the barycentric grid."""
    for i in range(R + 1):
        for j in range(R + 1 - i):
            x = ProbVec([Fraction(i, R), Fraction(j, R), Fraction(R - i - j, R)])
            s_mem = max_prob(x, y) >= lam
            row = [x[0], x[1], x[2], s_mem]
            if which == "Tk":
                if s_mem:
                    t_mem = True
                else:
                    t_mem = t_k_membership(x, y, lam, k, D).status is Status.MEMBER
                row.append(t_mem)
            yield row


def cmd_simplex(args, out=None) -> int:
    out = out or sys.stdout
    y = load_vector(args.y, args.unnormalized, "y")
    if len(y) != 3:
        raise InputError("simplex output needs a 3-dimensional y")
    if args.resolution < 10:
        raise InputError("--resolution must be at least 10")
    lam = Fraction(args.lam)
    if not 0 <= lam <= 1:
        raise InputError("--lambda must lie in [0, 1]")
    if args.set == "Tk" and not 0 < lam:
        raise InputError("--set Tk needs lambda > 0")
    header = ["x1", "x2", "x3", "s_member"] + (["tk_member"] if args.set == "Tk" else [])
    if not args.quiet:
        out.write(",".join(header) + "\n")
    for row in simplex_rows(y, lam, args.resolution, args.set, args.k, args.grid):
        if not args.quiet:
            out.write(",".join(exact(v) if isinstance(v, Fraction) else str(v).lower() for v in row) + "\n")
    return EXIT_YES


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommands repeat the global flags without clobbering values given earlier
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--digits", type=int, default=d(6), help="decimal digits in reports")
    p.add_argument("--unnormalized", action="store_true", default=d(False),
                   help="accept vectors that do not sum to 1 and rescale them")
    p.add_argument("--seed", type=int, default=d(None), help="seed for randomized steps")
    p.add_argument("--quiet", action="store_true", default=d(False),
                   help="suppress output; exit status only")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="partcat",
                                description="Exact partial-catalysis analysis for LOCC conversions.")
    _add_common(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        _add_common(sp, suppress=True)
        return sp

    sp = command("prob", "maximal conversion probability")
    sp.add_argument("x")
    sp.add_argument("y")

    sp = command("check", "is c a partial catalyst for x -> y")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("c")

    sp = command("find", "search for partial catalysts")
    sp.add_argument("x")
    sp.add_argument("y")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--min-dim", action="store_true", help="smallest catalyst dimension")
    mode.add_argument("--grid", type=int, metavar="D", help="list grid catalysts with step 1/D")
    sp.add_argument("--k", type=int, default=None, help="catalyst dimension")

    sp = command("set", "structure of S^lambda(y) and T^lambda(y)")
    sp.add_argument("y")
    sp.add_argument("--lambda", dest="lam", default="1/2")
    sp.add_argument("--op", choices=["extremes", "equals-s", "boundary", "membership"], required=True)
    sp.add_argument("--x", default=None)
    sp.add_argument("--c", default=None)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--grid", type=int, default=24)

    sp = command("simplex", "CSV membership grid for n = 3")
    sp.add_argument("y")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--resolution", type=int, default=50)
    sp.add_argument("--set", choices=["S", "Tk"], default="S")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--grid", type=int, default=24)
    return p


COMMANDS = {"prob": cmd_prob, "check": cmd_check, "find": cmd_find, "set": cmd_set}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    args.argv = argv
    if args.seed is not None:
        random.seed(args.seed)
    try:
        if args.command == "simplex":
            return cmd_simplex(args)
        rep = Reporter(args)
        code = COMMANDS[args.command](args, rep)
    except (InputError, ValueError) as exc:
        print(f"partcat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep.emit(args.quiet)
    return code


if __name__ == "__main__":
    sys.exit(main())
