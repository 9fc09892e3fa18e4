#!/usr/bin/env python3
"""Print the squared norm of each standard-type eigenfunction up to a degree.

Each row checks the closed form against the pairing computed directly.

    python scripts/norm_table.py --m 2 --N 2 --kappa 1/3,1/5 --degree 4
"""
import argparse
from fractions import Fraction
from itertools import product

from dunkl_gmpn.dunkl import OperatorContext, pairing
from dunkl_gmpn.exactnum import CycNumber
from dunkl_gmpn.jack import eigenfunction_for_type, is_standard, norm_closed_form
from dunkl_gmpn.polyring import compositions


def rows(ctx: OperatorContext, degree: int):
    m, N = ctx.m, ctx.N
    for alpha in product(range(m), repeat=N):
        if not is_standard(alpha) or sum(alpha) > degree:
            continue
        for gd in range((degree - sum(alpha)) // m + 1):
            for gamma in compositions(gd, N):
                f, _, _ = eigenfunction_for_type(ctx, alpha, gamma)
                closed = norm_closed_form(ctx, alpha, gamma)
                direct = pairing(ctx, f, f)
                yield alpha, gamma, closed, direct == CycNumber.from_rational(m, closed)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--N", type=int, default=2)
    ap.add_argument("--kappa", default=None, help="comma separated kappa_0..kappa_{m-1}")
    ap.add_argument("--degree", type=int, default=4)
    args = ap.parse_args(argv)
    kappa = [Fraction(v) for v in args.kappa.split(",")] if args.kappa else [Fraction(1, 3)] * args.m
    ctx = OperatorContext.build(args.m, 1, args.N, kappa)
    ok = True
    print(f"{'alpha':<12}{'gamma':<12}{'norm':<24}match")
    for alpha, gamma, value, match in rows(ctx, args.degree):
        ok &= match
        print(f"{str(alpha):<12}{str(gamma):<12}{str(value):<24}{match}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
