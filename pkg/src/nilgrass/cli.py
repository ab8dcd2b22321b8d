"""Command-line front end: ``nilgrass <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .combinatorics import rho, tau, tau_hat, tau_hat_inv, tau_inv
from .errors import ConsistencyError, NotInSpanError
from .grassmann import GrassmannRing, giambelli, giambelli_second, index_str, mul as gmul, oracle_mul, zeta
from .isomorphism import center_basis, check_center, eta, eta_hat
from .nilhecke import NilHecke
from .parsing import ParseError, parse_class, parse_element, parse_index
from .serialize import basic_to_json, class_to_json, element_to_json, polynomial_to_json
from .sympoly import format_terms
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common(json_flag: bool = True) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--ell", type=int, help="level ell (cyclotomic quotient, Grassmannian G(n, ell-n))")
    p.add_argument("--n", type=int, help="rank n")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized cases (default 0)")
    if json_flag:
        p.add_argument("--json", action="store_true", help="emit JSON")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="nilgrass",
        description="NilHecke algebras, Grassmannian cohomology and the maps between them.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default="all", choices=[*SUITES, "all"])
    p.add_argument("--failures-only", action="store_true", help="only list failing cases")

    for name, text in (("mul-nh", "multiply nilHecke expressions"), ("normal-form", "normal form of an expression")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--flavor", choices=["free", "cyclotomic"],
                       help="default: cyclotomic when --ell is given, else free")
        p.add_argument("exprs", nargs="+" if name == "mul-nh" else 1, metavar="EXPR")

    p = sub.add_parser("mul-schubert", parents=[common], help="multiply classes of G(n, ell-n)")
    p.add_argument("--oracle", action="store_true", help="use the Schur-polynomial oracle")
    p.add_argument("classes", nargs="+", metavar="CLASS")

    p = sub.add_parser("giambelli", parents=[common], help="Giambelli expansion of a Schubert index")
    p.add_argument("--second", action="store_true", help="evaluate det(c_{a_i+i-j}) in G(ell-n, n)")
    p.add_argument("index", metavar="INDEX")

    sub.add_parser("center", parents=[common], help="Schur basis of the center of H_{ell,n}")

    p = sub.add_parser("eta", parents=[common], help="image of a class in the basic algebra")
    p.add_argument("--hat", action="store_true", help="use eta_hat on G(ell-n, n)")
    p.add_argument("cls", metavar="CLASS")

    p = sub.add_parser("map", parents=[common], help="apply one of the combinatorial bijections")
    p.add_argument("--which", required=True, choices=["rho", "tau", "tau-inv", "tau-hat", "tau-hat-inv", "zeta"])
    p.add_argument("arg", metavar="TUPLE")
    return parser


def _need(args, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for {args.command}")


def _pair(args) -> tuple[int, int]:
    _need(args, "ell", "n")
    if not 1 <= args.n <= args.ell:
        raise UsageError(f"--n must satisfy 1 <= n <= ell (got --ell {args.ell} --n {args.n})")
    return args.ell, args.n


def _algebra(args) -> NilHecke:
    _need(args, "n")
    if args.n < 1:
        raise UsageError("--n must be positive")
    flavor = args.flavor or ("cyclotomic" if args.ell is not None else "free")
    if flavor == "free":
        return NilHecke(args.n)
    _need(args, "ell")
    if args.n > args.ell:
        raise UsageError(f"--n must not exceed --ell (got --ell {args.ell} --n {args.n})")
    return NilHecke(args.n, args.ell)


def _emit(out: TextIO, args, text: str, data) -> None:
    if args.json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(text + "\n")


def cmd_verify(args, out: TextIO) -> int:
    if args.ell is not None and args.n is not None and not 1 <= args.n <= args.ell:
        raise UsageError(f"--n must satisfy 1 <= n <= ell (got --ell {args.ell} --n {args.n})")
    reports = run_suite(args.suite, args.ell, args.n, args.seed)
    ok = all(r.passed for r in reports)
    if args.json:
        data = {"passed": ok, "suites": [r.to_json() for r in reports]}
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        for r in reports:
            for line in r.lines(failures_only=args.failures_only):
                out.write(line + "\n")
        out.write(f"overall: {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_nilhecke(args, out: TextIO) -> int:
    alg = _algebra(args)
    result = alg.one()
    for src in args.exprs:
        result = result * parse_element(src, alg)
    _emit(out, args, str(result), element_to_json(result))
    return EXIT_OK


def cmd_mul_schubert(args, out: TextIO) -> int:
    ell, n = _pair(args)
    ring = GrassmannRing(n, ell - n)
    classes = [parse_class(c, ring) for c in args.classes]
    if args.oracle:
        result = oracle_mul(*classes)
    else:
        result = classes[0]
        for c in classes[1:]:
            result = gmul(result, c)
    _emit(out, args, str(result), class_to_json(result))
    return EXIT_OK


def _ctilde_str(factors: tuple[int, ...]) -> str:
    return "*".join(f"ct{j}" for j in factors)


def cmd_giambelli(args, out: TextIO) -> int:
    ell, n = _pair(args)
    a = parse_index(args.index)
    if args.second:
        result = giambelli_second(a, ell)
        _emit(out, args, str(result), class_to_json(result))
        return EXIT_OK
    ring = GrassmannRing(n, ell - n)
    expansion = giambelli(a, ring)
    text = format_terms((_ctilde_str(f), c) for f, c in expansion.items())
    data = {
        "index": list(a),
        "expansion": [{"ctilde": list(f), "coeff": str(c)} for f, c in expansion.items()],
        "value": class_to_json(ring.cls(a)),
    }
    _emit(out, args, f"{text} = {index_str(a)}", data)
    return EXIT_OK


def cmd_center(args, out: TextIO) -> int:
    ell, n = _pair(args)
    rows = center_basis(ell, n)
    report = check_center(ell, n)
    if args.json:
        data = {
            "ell": ell,
            "n": n,
            "basis": [
                {"strict": list(lam), "partition": list(p), "polynomial": polynomial_to_json(f)}
                for lam, p, f in rows
            ],
            "passed": report.passed,
        }
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        for lam, p, f in rows:
            out.write(f"rho{index_str(lam)} = {index_str(p)}: s{index_str(p)}(y) = {f}\n")
        out.write(report.summary() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_eta(args, out: TextIO) -> int:
    ell, n = _pair(args)
    ring = GrassmannRing(ell - n, n) if args.hat else GrassmannRing(n, ell - n)
    x = parse_class(args.cls, ring)
    result = eta_hat(x) if args.hat else eta(x)
    _emit(out, args, str(result), basic_to_json(result))
    return EXIT_OK


def cmd_map(args, out: TextIO) -> int:
    _need(args, "ell")
    ell = args.ell
    which = args.which
    if which == "zeta":
        _need(args, "n")
        ring = GrassmannRing(args.n, ell - args.n)
        result = zeta(parse_class(args.arg, ring))
        _emit(out, args, str(result), class_to_json(result))
        return EXIT_OK
    t = parse_index(args.arg)
    fn = {"rho": rho, "tau": tau, "tau-inv": tau_inv, "tau-hat": tau_hat, "tau-hat-inv": tau_hat_inv}[which]
    result = fn(t, ell)
    _emit(out, args, index_str(result), {"map": which, "ell": ell, "input": list(t), "output": list(result)})
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "mul-nh": cmd_nilhecke,
    "normal-form": cmd_nilhecke,
    "mul-schubert": cmd_mul_schubert,
    "giambelli": cmd_giambelli,
    "center": cmd_center,
    "eta": cmd_eta,
    "map": cmd_map,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Execute one command line; returns the exit code instead of exiting."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ParseError, NotInSpanError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        err.write(f"nilgrass {args.command}: error: {msg}\n")
        return EXIT_USAGE
    except ConsistencyError as e:
        err.write(f"nilgrass {args.command}: internal consistency failure: {e}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())
