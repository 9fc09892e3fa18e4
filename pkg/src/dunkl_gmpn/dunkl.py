"""Dunkl operators for G(m,p,N), the type-A operators, U_i, and the pairing.

All operators act on monomials by closed formulas with rational coefficients;
divided differences are expanded as finite geometric sums, so outputs are
polynomials by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactnum import CycNumber, ParamTuple, make_params
from .group import lambda_apply
from .polyring import Composition, Polynomial, compositions


@dataclass(frozen=True)
class OperatorContext:
    m: int
    p: int
    N: int
    kappa: ParamTuple

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")
        if self.kappa.m != self.m or self.kappa.p != self.p:
            raise ValueError("parameter tuple does not match (m, p)")

    @classmethod
    def build(cls, m: int, p: int, N: int, free: Sequence) -> "OperatorContext":
        return cls(m, p, N, make_params(m, p, free))

    @property
    def kappa0(self) -> Fraction:
        return self.kappa[0]

    def with_kappa(self, kappa: ParamTuple) -> "OperatorContext":
        return OperatorContext(self.m, self.p, self.N, kappa)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.N, self.m)

    def one(self) -> Polynomial:
        return Polynomial.constant(self.N, self.m, 1)

    def x(self, i: int) -> Polynomial:
        return Polynomial.variable(i, self.N, self.m)


def _check_index(i: int, N: int):
    if not 1 <= i <= N:
        raise IndexError(f"operator index {i} out of range 1..{N}")


def divided_difference(alpha: Composition, i: int, j: int) -> list[tuple[Composition, int]]:
    """(x^a - (i,j) x^a) / (x_i - x_j) as (exponent, sign) pairs; i, j are 0-based."""
    ai, aj = alpha[i], alpha[j]
    if ai == aj:
        return []
    sign = 1 if ai > aj else -1
    out = []
    for t in range(min(ai, aj), max(ai, aj)):
        e = list(alpha)
        e[i] = ai + aj - t - 1
        e[j] = t
        out.append((tuple(e), sign))
    return out


@lru_cache(maxsize=None)
def t_monomial(i: int, alpha: Composition, m: int, kappa: tuple) -> tuple[tuple[Composition, Fraction], ...]:
    """T_i x^alpha (i is 0-based) as a tuple of (exponent, rational coefficient)."""
    acc: dict = {}
    ai = alpha[i]
    if ai:
        lower = alpha[:i] + (ai - 1,) + alpha[i + 1:]
        c = Fraction(ai)
        s = ai % m
        if s:
            c += m * kappa[s]
        if c:
            acc[lower] = c
    k0 = kappa[0]
    if k0:
        mk0 = m * k0
        for j in range(len(alpha)):
            if j == i:
                continue
            aj = alpha[j]
            for e, sign in divided_difference(alpha, i, j):
                if (e[j] - aj) % m == 0:
                    acc[e] = acc.get(e, 0) + sign * mk0
    return tuple((e, c) for e, c in sorted(acc.items()) if c)


def _apply_monomial_map(poly: Polynomial, fn) -> Polynomial:
    acc: dict = {}
    for e, c in poly.terms.items():
        for f, q in fn(e):
            v = c.scale(q)
            prev = acc.get(f)
            acc[f] = v if prev is None else prev + v
    return Polynomial.from_accumulator(poly.nvars, poly.m, acc)


def apply_T(ctx: OperatorContext, i: int, poly: Polynomial) -> Polynomial:
    """T_i(kappa) p."""
    _check_index(i, ctx.N)
    kappa = ctx.kappa.kappa
    return _apply_monomial_map(poly, lambda e: t_monomial(i - 1, e, ctx.m, kappa))


def apply_T_power(ctx: OperatorContext, alpha: Composition, poly: Polynomial) -> Polynomial:
    """T^alpha p, applied right to left."""
    out = poly
    for k in range(len(alpha) - 1, -1, -1):
        for _ in range(alpha[k]):
            out = apply_T(ctx, k + 1, out)
            if not out:
                return out
    return out


def apply_operator_polynomial(ctx: OperatorContext, f: Polynomial, poly: Polynomial) -> Polynomial:
    """f(T) p: every x-monomial of f is replaced by the matching T-monomial."""
    out = Polynomial.zero(poly.nvars, poly.m)
    for e, c in f.terms.items():
        out = out + apply_T_power(ctx, e, poly).scale(c.embed(poly.m) if isinstance(c, CycNumber) else c)
    return out


# ---------------------------------------------------------------------------
# type A operators on polynomials in y


def _kappa0(ctx) -> Fraction:
    if isinstance(ctx, OperatorContext):
        return ctx.kappa0
    if hasattr(ctx, "kappa0"):
        return ctx.kappa0
    return Fraction(ctx)


def apply_D(ctx, i: int, g: Polynomial) -> Polynomial:
    """Type-A Dunkl operator D_i on g(y); ``ctx`` supplies kappa_0."""
    _check_index(i, g.nvars)
    k0 = _kappa0(ctx)
    return _apply_monomial_map(g, lambda e: t_monomial(i - 1, e, 1, (k0,)))


def transpose_poly(g: Polynomial, i: int, j: int) -> Polynomial:
    """(i,j) acting on g by swapping variables (1-based)."""
    a, b = i - 1, j - 1
    out = {}
    for e, c in g.terms.items():
        f = list(e)
        f[a], f[b] = f[b], f[a]
        out[tuple(f)] = c
    return Polynomial._raw(g.nvars, g.m, out)


def apply_UA(ctx, i: int, g: Polynomial) -> Polynomial:
    """U_i^A = D_i y_i + kappa_0 - kappa_0 sum_{j<i} (i,j)."""
    k0 = _kappa0(ctx)
    e = [0] * g.nvars
    e[i - 1] = 1
    out = apply_D(k0, i, g.mul_monomial(tuple(e))) + g.scale(k0)
    for j in range(1, i):
        out = out - transpose_poly(g, i, j).scale(k0)
    return out


# ---------------------------------------------------------------------------
# U_i, Euler operator, commutator


def apply_U(ctx: OperatorContext, i: int, poly: Polynomial) -> Polynomial:
    """U_i = T_i x_i - kappa_0 sum_{j<i} lambda_ij."""
    _check_index(i, ctx.N)
    e = [0] * ctx.N
    e[i - 1] = 1
    out = apply_T(ctx, i, poly.mul_monomial(tuple(e)))
    k0 = ctx.kappa0
    if k0:
        for j in range(1, i):
            out = out - lambda_apply(i, j, poly, ctx.m).scale(k0)
    return out


def euler_apply(ctx: OperatorContext, poly: Polynomial) -> Polynomial:
    """E(k) = sum_i x_i T_i."""
    out = Polynomial.zero(poly.nvars, poly.m)
    for i in range(1, ctx.N + 1):
        e = [0] * ctx.N
        e[i - 1] = 1
        out = out + apply_T(ctx, i, poly).mul_monomial(tuple(e))
    return out


def commutator_xj_Ti(ctx: OperatorContext, i: int, j: int, poly: Polynomial) -> Polynomial:
    """(x_j T_i - T_i x_j) p."""
    if i == j:
        raise ValueError("commutator [x_j, T_i] needs i != j")
    ej = [0] * ctx.N
    ej[j - 1] = 1
    ej = tuple(ej)
    return apply_T(ctx, i, poly).mul_monomial(ej) - apply_T(ctx, i, poly.mul_monomial(ej))


def commutator_rhs(ctx: OperatorContext, i: int, j: int, poly: Polynomial) -> Polynomial:
    """kappa_0 sum_s eta^s tau_j^{-s} (i,j) tau_j^s p."""
    from .group import GroupElement

    m, N = ctx.m, ctx.N
    out = Polynomial.zero(N, poly.m)
    for s in range(m):
        g = GroupElement.tau(j, -s, N, m) * GroupElement.transposition(i, j, N, m) * GroupElement.tau(j, s, N, m)
        out = out + g.act(poly).scale(CycNumber.root_of_unity_power(m, s).embed(poly.m))
    return out.scale(ctx.kappa0)


# ---------------------------------------------------------------------------
# factorized forms on x^alpha g(y), used as cross-checks


def t_on_parity_product(ctx: OperatorContext, i: int, alpha: Composition, g: Polynomial) -> Polynomial:
    """T_i(x^alpha g(y)) via the type-A reduction, alpha a parity type; g is given in y."""
    m, k0 = ctx.m, ctx.kappa0
    N = ctx.N
    a = i - 1
    if alpha[a] > 0:
        inner = apply_D(k0, i, g.mul_monomial(_unit(N, a)))
        inner = inner + g.scale(Fraction(alpha[a], m) + ctx.kappa[alpha[a]] - 1)
        for j in range(1, N + 1):
            if j != i and alpha[j - 1] >= alpha[a]:
                inner = inner - transpose_poly(g, i, j).scale(k0)
        shift = tuple(al - (1 if k == a else 0) for k, al in enumerate(alpha))
    else:
        inner = apply_D(k0, i, g)
        shift = tuple(al + (m - 1 if k == a else 0) for k, al in enumerate(alpha))
    return _x_times_y(shift, inner, m).scale(m)


def u_on_parity_product(ctx: OperatorContext, i: int, alpha: Composition, g: Polynomial) -> Polynomial:
    """U_i(x^alpha g(y)) via the type-A reduction."""
    m, k0, N = ctx.m, ctx.kappa0, ctx.N
    a = i - 1
    inner = apply_D(k0, i, g.mul_monomial(_unit(N, a)))
    if alpha[a] < m - 1:
        inner = inner + g.scale(Fraction(alpha[a] + 1, m) + ctx.kappa[alpha[a] + 1] - 1)
        for j in range(1, N + 1):
            b = j - 1
            if alpha[b] > alpha[a] or (j < i and alpha[b] == alpha[a]):
                inner = inner - transpose_poly(g, i, j).scale(k0)
    else:
        for j in range(1, i):
            if alpha[j - 1] == m - 1:
                inner = inner - transpose_poly(g, i, j).scale(k0)
    return _x_times_y(tuple(alpha), inner, m).scale(m)


def _unit(N: int, a: int) -> tuple:
    return tuple(1 if k == a else 0 for k in range(N))


def _x_times_y(alpha: Composition, g: Polynomial, m: int) -> Polynomial:
    """x^alpha g(x^m), with the result carried at conductor m."""
    terms = {tuple(a + m * b for a, b in zip(alpha, e)): c.embed(m) for e, c in g.terms.items()}
    return Polynomial._raw(g.nvars, m, terms)


# ---------------------------------------------------------------------------
# the pairing


@lru_cache(maxsize=None)
def _pair_monomials(alpha: Composition, beta: Composition, m: int, kappa: tuple) -> Fraction:
    """(x^alpha, x^beta)_k; rational for rational kappa."""
    if sum(alpha) != sum(beta):
        return Fraction(0)
    if not any(alpha):
        return Fraction(1)
    k = max(idx for idx, a in enumerate(alpha) if a)
    lower = alpha[:k] + (alpha[k] - 1,) + alpha[k + 1:]
    total = Fraction(0)
    for e, c in t_monomial(k, beta, m, kappa):
        v = _pair_monomials(lower, e, m, kappa)
        if v:
            total += c * v
    return total


def pair_monomials(ctx: OperatorContext, alpha: Composition, beta: Composition) -> Fraction:
    return _pair_monomials(tuple(alpha), tuple(beta), ctx.m, ctx.kappa.kappa)


def pairing(ctx: OperatorContext, p: Polynomial, q: Polynomial) -> CycNumber:
    """(p, q)_k = (p*(T) q)(0), summed over matching homogeneous components."""
    m = max(p.m, q.m)
    if m % p.m or m % q.m:
        m = p.m * q.m
    total = CycNumber.zero(m)
    qt = [(e, c.embed(m)) for e, c in q.terms.items()]
    for a, ca in p.terms.items():
        cc = ca.conjugate().embed(m)
        da = sum(a)
        for b, cb in qt:
            if sum(b) != da:
                continue
            v = pair_monomials(ctx, a, b)
            if v:
                total = total + (cc * cb).scale(v)
    return total


def monomial_basis(N: int, degree: int) -> tuple[Composition, ...]:
    """Monomial basis of P_degree in the fixed (lex decreasing) order."""
    return compositions(degree, N)


def gram_matrix(ctx: OperatorContext, degree: int) -> list[list[CycNumber]]:
    basis = monomial_basis(ctx.N, degree)
    return [[CycNumber.from_rational(ctx.m, pair_monomials(ctx, a, b)) for b in basis] for a in basis]


def clear_caches():
    t_monomial.cache_clear()
    _pair_monomials.cache_clear()
