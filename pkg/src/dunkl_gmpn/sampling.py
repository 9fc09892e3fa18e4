"""Seeded random inputs: rational parameters and admissible polynomials."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from .exactnum import ParamTuple, make_params
from .polyring import Polynomial, compositions, y_view

DEFAULT_BOUND = 40


def random_rational(rng: random.Random, bound: int = DEFAULT_BOUND, nonnegative: bool = False) -> Fraction:
    num = rng.randint(0 if nonnegative else -bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def k1_hit(kappa: ParamTuple, N: int) -> bool:
    m = kappa.m
    for n in range(N):
        for i in range(1, m):
            v = n * kappa[0] + Fraction(i, m) + kappa[i]
            if v <= 0 and v.denominator == 1:
                return True
    return False


def negative_small_denominator(k0: Fraction, N: int) -> bool:
    """k0 = -l/n with 1 <= n <= N, l >= 1: covers every Jack pole and every K_0 value."""
    if k0 >= 0:
        return False
    return any((-n * k0).denominator == 1 for n in range(1, N + 1))


def random_kappa(
    m: int, p: int, N: int, rng: random.Random, bound: int = DEFAULT_BOUND, nonnegative: bool = False
) -> ParamTuple:
    """Generic rational parameters, rejecting K_1 witnesses and the pole/K_0 set."""
    q = m // p
    while True:
        free = [random_rational(rng, bound, nonnegative) for _ in range(q)]
        kappa = make_params(m, p, free)
        if k1_hit(kappa, N) or negative_small_denominator(kappa[0], N):
            continue
        return kappa


def random_polynomial(N: int, degree: int, m: int, rng: random.Random, density: float = 0.6, bound: int = 9) -> Polynomial:
    """Random homogeneous rational polynomial of the given degree (never zero)."""
    basis = compositions(degree, N)
    while True:
        terms = {}
        for e in basis:
            if rng.random() < density:
                c = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
                if c:
                    terms[e] = c
        if terms:
            return Polynomial(N, m, terms)


def random_y_polynomial(N: int, y_degree: int, m: int, rng: random.Random) -> Polynomial:
    """Random homogeneous g(y) embedded as a polynomial in x."""
    return y_view(random_polynomial(N, y_degree, 1, rng), m)


def monomial_symmetric(lam: tuple, N: int) -> Polynomial:
    exps = set(permutations(lam + (0,) * (N - len(lam))))
    return Polynomial(N, 1, {e: 1 for e in exps})


def partitions(n: int, max_parts: int, max_part: int | None = None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def random_symmetric_y(N: int, y_degree: int, m: int, rng: random.Random) -> Polynomial:
    """Random symmetric g(y) of y-degree ``y_degree`` (nonzero)."""
    while True:
        out = Polynomial.zero(N, 1)
        for lam in partitions(y_degree, N):
            c = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            if c:
                out = out + monomial_symmetric(lam, N).scale(c)
        if out:
            return y_view(out, m)


def elementary_y(k: int, N: int, m: int) -> Polynomial:
    """e_k(y) as a polynomial in x."""
    terms = {}
    for sub in combinations(range(N), k):
        terms[tuple(m if i in sub else 0 for i in range(N))] = 1
    return Polynomial(N, m, terms)


def invariant_generators(m: int, p: int, N: int) -> list[Polynomial]:
    """e_1(y) .. e_{N-1}(y) and x^{(m/p) upsilon}, generating the G(m,p,N) invariants."""
    gens = [elementary_y(k, N, m) for k in range(1, N)]
    gens.append(Polynomial.monomial((m // p,) * N, m))
    return gens


def random_invariant(m: int, p: int, N: int, degree: int, rng: random.Random) -> Polynomial | None:
    """Random homogeneous invariant of x-degree ``degree`` (None if that degree has none)."""
    gens = invariant_generators(m, p, N)
    degs = [g.degree() for g in gens]
    combos = []

    def rec(k, remaining, chosen):
        if k == len(gens):
            if remaining == 0:
                combos.append(tuple(chosen))
            return
        for c in range(remaining // degs[k] + 1):
            rec(k + 1, remaining - c * degs[k], chosen + [c])

    rec(0, degree, [])
    if not combos:
        return None
    while True:
        out = Polynomial.zero(N, m)
        for combo in combos:
            c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            if not c:
                continue
            term = Polynomial.constant(N, m, c)
            for g, k in zip(gens, combo):
                term = term * g ** k
            out = out + term
        if out:
            return out
