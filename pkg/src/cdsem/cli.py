"""Command-line front end.

Exit codes: 0 positive verdict, 1 negative verdict, 2 input error,
3 oracle scope refused.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import checker
from .checker import Scope, ScopeTooLarge
from .emit import DEFAULT_IMPORTS, emit_system, emit_term, emit_theory
from .syntax import DiagramFileError, ParseError, dump_diagram, is_ident, parse_files
from .system import VariationConfig

EXIT_POSITIVE, EXIT_NEGATIVE, EXIT_INPUT, EXIT_SCOPE = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _load(paths):
    try:
        return parse_files(paths)
    except (ParseError, DiagramFileError) as exc:
        raise _InputError(str(exc)) from exc


def _config(args) -> VariationConfig:
    return VariationConfig(
        require_car_nonempty=not args.no_car,
        require_transitive=not args.no_transitive,
        require_noncircular=args.noncircular,
        single_inheritance=args.single_inheritance,
    )


def _write_result(out, result) -> None:
    if result.consistent:
        out.write("WITNESS\n")
        out.write(emit_system(result.witness))
    else:
        out.write(f"{result.evidence}\n")


def cmd_parse(args, out) -> int:
    (diagram,) = _load([args.file])
    out.write(dump_diagram(diagram))
    return EXIT_POSITIVE


def cmd_check(args, out) -> int:
    docs = _load(args.files)
    cfg = _config(args)
    result = checker.check_consistency(docs, cfg)
    out.write(f"RESULT consistent={str(result.consistent).lower()}\n")
    _write_result(out, result)
    if args.oracle:
        oracle = checker.brute_force_consistency(docs, cfg, Scope(extra_classes=args.scope))
        agree = oracle.consistent == result.consistent
        out.write(f"ORACLE consistent={str(oracle.consistent).lower()} "
                  f"scope={args.scope} agree={str(agree).lower()}\n")
    return EXIT_POSITIVE if result.consistent else EXIT_NEGATIVE


def cmd_refine(args, out) -> int:
    refined = _load(args.files)
    abstract = _load(args.of)
    cfg = _config(args)
    result = checker.check_refinement(refined, abstract, cfg)
    out.write(f"RESULT refines={str(result.refines).lower()}\n")
    if not result.refines:
        out.write("COUNTEREXAMPLE\n")
        out.write(emit_system(result.counterexample))
    if args.oracle:
        oracle = checker.brute_force_refinement(refined, abstract, cfg, Scope(extra_classes=args.scope))
        agree = oracle.refines == result.refines
        out.write(f"ORACLE refines={str(oracle.refines).lower()} within-scope={args.scope} "
                  f"agree={str(agree).lower()}\n")
    return EXIT_POSITIVE if result.refines else EXIT_NEGATIVE


def cmd_emit(args, out) -> int:
    if not is_ident(args.name):
        raise _InputError(f"invalid constant name {args.name!r}")
    (diagram,) = _load([args.file])
    if args.theory:
        out.write(emit_theory(diagram, args.name, args.imports))
    else:
        out.write(emit_term(diagram, args.name))
    return EXIT_POSITIVE


def _add_variation_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--noncircular", action="store_true", help="require an antisymmetric subclass relation")
    p.add_argument("--no-transitive", action="store_true", help="do not require a transitive subclass relation")
    p.add_argument("--no-car", action="store_true", help="allow empty carrier sets")
    p.add_argument("--single-inheritance", action="store_true", help="reject classes with several superclasses")
    p.add_argument("--oracle", action="store_true", help="cross-check with the bounded enumeration oracle")
    p.add_argument("--scope", type=int, default=0, metavar="N", help="extra classes for the oracle (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdsem", description="Class-diagram semantics workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print the abstract syntax of a diagram")
    p.add_argument("file")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("check", help="decide consistency of diagrams")
    p.add_argument("files", nargs="+")
    _add_variation_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("refine", help="decide whether FILES refine the --of diagrams")
    p.add_argument("files", nargs="+")
    p.add_argument("--of", nargs="+", required=True, metavar="FILE")
    _add_variation_flags(p)
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("emit", help="print the diagram as a constant definition")
    p.add_argument("file")
    p.add_argument("--name", required=True, help="name of the defined constant")
    p.add_argument("--theory", action="store_true", help="wrap the definition in a theory")
    p.add_argument("--imports", default=DEFAULT_IMPORTS, help="import path used with --theory")
    p.set_defaults(func=cmd_emit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_POSITIVE
    if getattr(args, "scope", 0) < 0:
        print("cdsem: --scope must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, sys.stdout)
    except _InputError as exc:
        print(f"cdsem: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ScopeTooLarge as exc:
        print(f"cdsem: {exc}", file=sys.stderr)
        return EXIT_SCOPE


if __name__ == "__main__":
    sys.exit(main())
