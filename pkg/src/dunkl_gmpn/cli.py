"""Command-line front end: ``dunkl-gmpn {zeta,pair,verify}``.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 bad input or pole.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .dunkl import OperatorContext, pairing
from .exactnum import format_rational, make_params, parse_rational
from .jack import JackContext, PoleError, xi_vector, zeta
from .polyring import PolynomialParseError, parse_polynomial
from .verify import SUITES, RunConfig, run_suites

SCHEMA = "1"


class UsageError(ValueError):
    pass


def _rationals(text: str) -> tuple:
    try:
        return tuple(parse_rational(t) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}: {exc}") from None


def _ints(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _emit(args, payload: dict, text_lines: list[str]):
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _config(args) -> RunConfig:
    kappa = _rationals(args.kappa) if args.kappa is not None else None
    if kappa is None and args.kappa0 is not None and args.p > 0 and args.m % args.p == 0:
        kappa = (parse_rational(args.kappa0),) + (0,) * (args.m // args.p - 1)
    try:
        return RunConfig(m=args.m, p=args.p, N=args.N, kappa=kappa, seed=args.seed, degree=args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_zeta(args) -> int:
    if args.mu is None:
        raise UsageError("--mu is required")
    mu = _ints(args.mu)
    if len(mu) != args.N:
        # a bare --mu fixes N when --N was left at its default
        if args.N_default:
            args.N = len(mu)
        else:
            raise UsageError(f"--mu has {len(mu)} entries but N={args.N}")
    if args.kappa0 is not None:
        k0 = parse_rational(args.kappa0)
    elif args.kappa is not None:
        k0 = _rationals(args.kappa)[0]
    else:
        k0 = 0
    z = zeta(JackContext(args.N, k0), mu)
    _emit(
        args,
        {"command": "zeta", "N": args.N, "kappa0": format_rational(k0), "mu": list(mu), "zeta": z.to_json(),
         "xi": [format_rational(v) for v in xi_vector(args.N, k0, mu)]},
        [z.to_text()],
    )
    return 0


def cmd_pair(args) -> int:
    cfg = _config(args)
    kappa = cfg.kappa if cfg.kappa is not None else (0,) * (cfg.m // cfg.p)
    ctx = OperatorContext(cfg.m, cfg.p, cfg.N, make_params(cfg.m, cfg.p, kappa))
    try:
        p = parse_polynomial(args.p_text, cfg.N, cfg.m)
        q = parse_polynomial(args.q_text, cfg.N, cfg.m)
    except PolynomialParseError as exc:
        raise UsageError(str(exc)) from None
    val = pairing(ctx, p, q)
    _emit(
        args,
        {
            "command": "pair",
            "m": cfg.m, "p": cfg.p, "N": cfg.N,
            "kappa": [format_rational(k) for k in kappa],
            "value": str(val),
            "coordinates": val.to_json(),
        },
        [str(val)],
    )
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args)
    results = run_suites(cfg, args.suite)
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        lines.append(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.checks} checks)")
        for item in r.items:
            lines.append("  " + json.dumps(item, sort_keys=True))
        for note in r.notes:
            lines.append(f"  note: {note}")
        for f in r.failures:
            lines.append("  counterexample: " + json.dumps(f, sort_keys=True))
    _emit(
        args,
        {
            "command": "verify",
            "config": {"m": cfg.m, "p": cfg.p, "N": cfg.N, "seed": cfg.seed, "degree": cfg.degree,
                       "kappa": [format_rational(k) for k in cfg.kappa] if cfg.kappa else None,
                       "suite": args.suite},
            "passed": ok,
            "suites": [r.to_json() for r in results],
        },
        lines,
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=1)
    common.add_argument("--p", type=int, default=1)
    common.add_argument("--N", type=int, default=None)
    common.add_argument("--kappa", help="comma-separated rationals: kappa_0 then the free kappa_i")
    common.add_argument("--kappa0", help="kappa_0 alone (other parameters zero)")
    common.add_argument("--degree", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="text")

    parser = argparse.ArgumentParser(prog="dunkl-gmpn", description="Exact Dunkl operator computations for G(m,p,N).")
    sub = parser.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", parents=[common], help="nonsymmetric Jack polynomial zeta_mu")
    z.add_argument("--mu", required=True, help="comma-separated composition")
    z.set_defaults(func=cmd_zeta)

    pr = sub.add_parser("pair", parents=[common], help="contravariant pairing (p, q)_kappa")
    pr.add_argument("p_text", metavar="P")
    pr.add_argument("q_text", metavar="Q")
    pr.set_defaults(func=cmd_pair)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.set_defaults(func=cmd_verify)
    return parser


_VALUE_FLAGS = ("--kappa", "--kappa0", "--mu")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1/2" as an option; attach such values to their flag
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    args.N_default = args.N is None
    if args.N is None:
        args.N = 1
    try:
        return args.func(args)
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
