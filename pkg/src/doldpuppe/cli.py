"""Command-line interface: ``doldpuppe <command> [options]``.

Exit status is 0 on success, 1 on bad input and 2 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gamma, honourable as hon, simplex
from .chain import ChainComplex
from .dold_puppe import ConsistencyError, ResourceLimitError, build, quotient_oracle
from .functors import PolynomialFunctor
from .linalg import ValidationError, homology, homology_mod_p


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def _matrix_text(m) -> str:
    if not m:
        return "[]"
    width = max(len(str(x)) for row in m for x in row) if m[0] else 1
    return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in m)


def _trace_text(family, marks) -> str:
    parts = []
    for x, m in zip(family, marks):
        parts.append("{" + ",".join(f"{i}{hon.UNDERLINE}" if i in m else str(i) for i in x) + "}")
    return "{" + ",".join(parts) + "}"


# ---------------------------------------------------------------------------
# commands

def cmd_tables(args, out):
    if not 0 <= args.k <= args.n or args.n < 1:
        raise ValidationError("need 0 <= k <= n and n >= 1")
    if args.json:
        grid = simplex.table_grid(args.n, args.k)
        rows = [{"ordinal": o, "partition": list(p), "cells": row}
                for o, (p, row) in enumerate(zip(simplex.enumerate_surjections(args.n, args.k), grid), 1)]
        json.dump({"n": args.n, "k": args.k, "rows": rows}, out, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(simplex.render_table(args.n, args.k) + "\n")


def cmd_gamma(args, out):
    C = ChainComplex.load(args.complex)
    if args.op == "face":
        b = gamma.face_op(C, args.n, args.i)
        m = gamma.face_matrix(C, args.n, args.i)
        head = f"d_{args.i}: Gamma_{args.n} -> Gamma_{args.n - 1}"
    else:
        b = gamma.degeneracy_op(C, args.n, args.i)
        m = gamma.degeneracy_matrix(C, args.n, args.i)
        head = f"s_{args.i}: Gamma_{args.n - 1} -> Gamma_{args.n}"
    formula = gamma.render(b, C)
    if args.json:
        data = {"op": args.op, "n": args.n, "i": args.i, "formula": formula}
        if args.matrix:
            data["matrix"] = m
        json.dump(data, out, ensure_ascii=False)
        out.write("\n")
        return
    out.write(f"{head}\n{formula}\n")
    if args.matrix:
        out.write(_matrix_text(m) + "\n")


def cmd_honourable(args, out):
    n = args.n
    if n < 1:
        raise ValidationError("--n must be at least 1")
    length = n if args.length is None else args.length
    if length < 1:
        raise ValidationError("--length must be at least 1")
    start = tuple(range(min(n, length)))
    degree = args.degree
    if degree is not None and degree < 1:
        raise ValidationError("--degree must be at least 1")
    trace = args.trace or (degree is None and not args.minimal_only)
    if trace:
        items = []
        for m, T in enumerate(hon.enumerate_families(n, start, degree), start=1):
            _, marks = hon.underline_scan(T)
            items.append((m, T, marks, hon.is_honourable(T, n)))
        if args.json:
            json.dump({"n": n, "trace": [{"index": m, "family": [list(x) for x in T], "honourable": h}
                                         for m, T, _, h in items]}, out)
            out.write("\n")
            return
        for m, T, marks, h in items:
            out.write(f"T{m:<3} {'H' if h else ' '} {_trace_text(T, marks)}\n")
        return
    minimal = hon.enumerate_minimal_honourable(n, start, degree)
    families = minimal if args.minimal_only else hon.complete_with_nonminimal(minimal, n, degree, length)
    if args.json:
        json.dump({"n": n, "families": [{"family": [list(x) for x in T], "slots":
                   [{"k": k, "ordinal": o} for k, o in hon.slots(T, n)]} for T in families]}, out)
        out.write("\n")
        return
    for T in families:
        out.write(hon.render_family(T) + "\n")


def _homology_lines(ranks, diffs, mod=None):
    out = []
    for n in range(len(ranks)):
        if mod:
            out.append((n, homology_mod_p(ranks, diffs, n, mod)))
        else:
            out.append((n, homology(ranks, diffs, n)))
    return out


def cmd_build(args, out):
    F = PolynomialFunctor.parse(args.functor)
    C = ChainComplex.load(args.complex)
    D = build(F, C)
    data = D.to_dict()
    if args.oracle:
        O = quotient_oracle(F, C, max_ambient=args.max_ambient)
        if O.ranks != D.ranks or O.invariant_factors() != D.invariant_factors():
            raise ConsistencyError(f"oracle disagrees: ranks {list(O.ranks)} vs {list(D.ranks)}")
        data["oracle"] = {"ranks": list(O.ranks), "agrees": True}
    if args.homology:
        data["homology"] = [str(h) for _, h in _homology_lines(D.complex.ranks, D.complex.differentials)]
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh, ensure_ascii=False, indent=1)
            fh.write("\n")
    if args.json:
        json.dump(data, out, ensure_ascii=False)
        out.write("\n")
        return
    out.write(f"{F.name} of a complex of length {C.length}\n")
    out.write("ranks: " + " ".join(map(str, D.ranks)) + "\n")
    for n, summands in enumerate(D.labels):
        if summands:
            out.write(f"Q_{n} = " + " + ".join(s.name for s in summands) + "\n")
    out.write(f"top degree: {D.top_degree} (bound {C.length * F.degree})\n")
    if args.oracle:
        out.write("oracle: agrees\n")
    if args.homology:
        for n, h in enumerate(data["homology"]):
            out.write(f"H_{n} = {h}\n")


def cmd_homology(args, out):
    C = ChainComplex.load(args.complex)
    if args.mod is not None and not _is_prime(args.mod):
        raise ValidationError(f"--mod must be a prime, got {args.mod}")
    lines = _homology_lines(C.ranks, C.differentials, args.mod)
    if args.json:
        if args.mod:
            data = {"mod": args.mod, "dimensions": [h for _, h in lines]}
        else:
            data = {"homology": [{"free_rank": h.free_rank, "torsion": list(h.torsion)} for _, h in lines]}
        json.dump(data, out)
        out.write("\n")
        return
    for n, h in lines:
        out.write(f"H_{n} = {h}\n" if not args.mod else f"dim H_{n} (mod {args.mod}) = {h}\n")


# ---------------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="doldpuppe", description="Dold-Puppe complexes of polynomial functors")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("tables", parents=[common], help="x / x* table of the sets S_i")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.set_defaults(func=cmd_tables)

    g = sub.add_parser("gamma", parents=[common], help="face and degeneracy operators of Gamma(C.)")
    g.add_argument("--complex", required=True, help="chain complex JSON file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--op", choices=["face", "degeneracy"], required=True)
    g.add_argument("--i", type=int, required=True)
    g.add_argument("--matrix", action="store_true", help="also print the integer matrix")
    g.set_defaults(func=cmd_gamma)

    h = sub.add_parser("honourable", parents=[common], help="enumerate honourable families")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--length", type=int, help="length of the complex (prunes large sets)")
    h.add_argument("--degree", type=int, help="functor degree (max number of sets)")
    h.add_argument("--minimal-only", action="store_true")
    h.add_argument("--trace", action="store_true", help="print the full list T_1, T_2, ...")
    h.set_defaults(func=cmd_honourable)

    b = sub.add_parser("build", parents=[common], help="build the Dold-Puppe complex")
    b.add_argument("--functor", required=True, help="sym:D, ext:D or tensor:D")
    b.add_argument("--complex", required=True)
    b.add_argument("--oracle", action="store_true", help="cross-check against the direct quotient")
    b.add_argument("--max-ambient", type=int, default=600)
    b.add_argument("--homology", action="store_true")
    b.add_argument("--out", help="write the complex as JSON here")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("homology", parents=[common], help="homology of a chain complex file")
    c.add_argument("--complex", required=True)
    c.add_argument("--mod", type=int, help="reduce modulo this prime first")
    c.set_defaults(func=cmd_homology)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = make_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 1
    except ConsistencyError as exc:
        err.write(f"consistency failure: {exc}\n")
        return 2
    except (ValidationError, ValueError, IndexError, ResourceLimitError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0
