"""Command-line front end.

    quasicrypt construct --p 2 --r 3 --m 3 --c 1
    quasicrypt analyze table.txt
    quasicrypt subq table.txt --one-based
    quasicrypt genby table.json 2
    quasicrypt isotope table.txt --pi 1,0,2 --pi1 0,1,2 --pi2 2,1,0

Reports go to stdout, diagnostics to stderr.  Usage errors exit 2, bad
input files and impossible constructions exit 1.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from . import construction, properties, subquasigroups
from .errors import (
    InvalidParamsError,
    NotPrimeError,
    NoValidMError,
    ParseError,
    QTooSmallError,
    ReducibleModulusError,
    ValidationError,
)
from .quasigroup import QTable, isotope, load_table, mult_group_orbit_pairs, to_json, to_text


@dataclass
class AnalysisReport:
    order: int
    subquasigroups: list[list[int]]
    simple: bool
    affine: bool
    polynomially_complete: bool
    associative_triples: int
    doubly_transitive: bool


def analyze_table(Q: QTable, offset: int = 0) -> AnalysisReport:
    subs = subquasigroups.find_all_subquasigroups(Q).subquasigroups
    simple = properties.is_simple(Q)
    affine, _ = properties.is_affine(Q)
    return AnalysisReport(
        order=Q.n,
        subquasigroups=[[v + offset for v in W] for W in subs],
        simple=simple,
        affine=affine,
        polynomially_complete=simple and not affine,
        associative_triples=properties.count_associative_triples(Q),
        doubly_transitive=mult_group_orbit_pairs(Q) == Q.n * (Q.n - 1),
    )


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _csv_ints(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _certify(table, params, roots, verify):
    ctx = params.ctx
    cert = {
        "affine_by_criterion": properties.affine_criterion(params.m, params.d, ctx.p, ctx.r),
        "beta_is_generator": ctx.is_generator(params.beta),
        "idempotent_roots": [x.tag for x in roots.roots],
        "no_proper_subquasigroups_by_roots": roots.count == 0,
    }
    if verify:
        subs = subquasigroups.find_all_subquasigroups(table).subquasigroups
        cert.update(
            subquasigroups=[list(W) for W in subs],
            simple=properties.is_simple(table),
            affine=properties.is_affine(table)[0],
            polynomially_complete=properties.is_polynomially_complete(table, params),
            associative_triples=properties.count_associative_triples(table),
            doubly_transitive=properties.is_doubly_transitive(table),
            two_generated=properties.two_generation_check(table),
        )
    return cert


def cmd_construct(args, parser) -> int:
    modulus = args.modulus
    try:
        table, params, roots = construction.construct_suitable(
            args.p, args.r, m=args.m, c=args.c, beta=args.beta, modulus=modulus,
            strategy=args.strategy)
    except NotPrimeError:
        parser.error("p must be prime")
    except (NoValidMError, QTooSmallError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidParamsError, ReducibleModulusError, ValueError) as exc:
        parser.error(str(exc))
    cert = _certify(table, params, roots, not args.no_verify)
    root_count = {"gamma": roots.gamma.tag, "rank": roots.rank, "count": roots.count,
                  "roots": [x.tag for x in roots.roots]}
    if args.format == "json":
        print(_dump({"params": params.to_dict(), "table": {"n": table.n, "cells": table.to_lists()},
                     "root_count": root_count, "certification": cert}))
    else:
        f = params.ctx
        out = [f"# GF({f.q}) modulus {','.join(map(str, f.modulus))} (low to high)",
               f"# m={params.m} d={params.d} alpha={params.alpha.tag} "
               f"beta={params.beta.tag} c={params.c.tag}"]
        out.append(to_text(table).rstrip("\n"))
        out.append(f"# circulant rank {roots.rank}, idempotent roots {root_count['roots']}")
        for key, val in cert.items():
            out.append(f"# {key}: {json.dumps(val)}")
        print("\n".join(out))
    return 0


def _load(path):
    try:
        return load_table(path)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror}", file=sys.stderr)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__.removesuffix('Error')}: {exc}", file=sys.stderr)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
    return None


def cmd_analyze(args, parser) -> int:
    Q = _load(args.file)
    if Q is None:
        return 1
    offset = 1 if args.one_based else 0
    print(_dump(asdict(analyze_table(Q, offset))))
    return 0


def cmd_subq(args, parser) -> int:
    Q = _load(args.file)
    if Q is None:
        return 1
    offset = 1 if args.one_based else 0
    subs = subquasigroups.find_all_subquasigroups(Q).subquasigroups
    print(_dump({"subquasigroups": [[v + offset for v in W] for W in subs]}))
    return 0


def cmd_genby(args, parser) -> int:
    Q = _load(args.file)
    if Q is None:
        return 1
    offset = 1 if args.one_based else 0
    a = args.element - offset
    if not 0 <= a < Q.n:
        parser.error(f"element {args.element} is out of range")
    trace = subquasigroups.generated_by(Q, a)
    chain = [sorted(v + offset for v in A) for A in trace.chain]
    print(_dump({"element": args.element, "chain": chain, "result": chain[-1],
                 "generates_q": len(trace.result) == Q.n}))
    return 0


def cmd_isotope(args, parser) -> int:
    Q = _load(args.file)
    if Q is None:
        return 1
    ident = list(range(Q.n))
    try:
        R = isotope(Q, args.pi or ident, args.pi1 or ident, args.pi2 or ident)
    except ValidationError as exc:
        parser.error(str(exc))
    sys.stdout.write(to_json(R) + "\n" if args.format == "json" else to_text(R))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasicrypt",
                                     description="Construct and analyze finite quasigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a polynomially complete quasigroup of order p^r")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--c", type=int, help="field tag of the constant")
    p.add_argument("--beta", type=int, help="field tag of the generator")
    p.add_argument("--modulus", type=_csv_ints, help="monic modulus, coefficients low to high")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--strategy", choices=("range", "rank", "both"), default="range")
    p.add_argument("--no-verify", action="store_true",
                   help="skip the exhaustive table checks")
    p.set_defaults(func=cmd_construct)

    for name, func, helptext in (("analyze", cmd_analyze, "full property report"),
                                 ("subq", cmd_subq, "list all proper subquasigroups")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("--one-based", action="store_true", help="print labels 1..n")
        p.set_defaults(func=func)

    p = sub.add_parser("genby", help="subquasigroup generated by one element")
    p.add_argument("file")
    p.add_argument("element", type=int)
    p.add_argument("--one-based", action="store_true",
                   help="ELEMENT and the output use labels 1..n")
    p.set_defaults(func=cmd_genby)

    p = sub.add_parser("isotope", help="apply x*y = pi(pi1^-1(x) . pi2^-1(y))")
    p.add_argument("file")
    p.add_argument("--pi", type=_csv_ints)
    p.add_argument("--pi1", type=_csv_ints)
    p.add_argument("--pi2", type=_csv_ints)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_isotope)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
