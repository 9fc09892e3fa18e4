"""Nonsymmetric Jack polynomials, eigenfunctions of U_i, and norm formulas.

Polynomials in y are ordinary :class:`Polynomial` objects with conductor 1;
``x^alpha g(y)`` is realized by substituting ``y_i = x_i^m``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Sequence

from . import linalg
from .dunkl import OperatorContext, _x_times_y, apply_UA
from .polyring import Composition, Polynomial, compositions, is_partition, permute_composition, sort_to_partition


class PoleError(ArithmeticError):
    """kappa_0 sits at a pole of the nonsymmetric Jack construction."""

    def __init__(self, kappa0, detail: str = ""):
        msg = f"kappa0 = {kappa0} is a pole"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.kappa0 = kappa0


def pole_witness(kappa0, N: int) -> tuple[int, int] | None:
    """(n, l) with n*kappa0 + l = 0, 1 <= n <= N, l >= 1, if any."""
    k = Fraction(kappa0)
    if k >= 0:
        return None
    for n in range(1, N + 1):
        l = -n * k
        if l.denominator == 1 and l >= 1:
            return n, int(l)
    return None


# ---------------------------------------------------------------------------
# eigenvalues and combinatorial factors


def xi(N: int, kappa0, mu: Composition, i: int) -> Fraction:
    """xi_i(mu), i is 1-based."""
    a = i - 1
    bigger = sum(1 for v in mu if v > mu[a])
    before = sum(1 for j in range(a) if mu[j] == mu[a])
    return Fraction(kappa0) * (N - bigger - before) + mu[a] + 1


def xi_vector(N: int, kappa0, mu: Composition) -> tuple[Fraction, ...]:
    return tuple(xi(N, kappa0, mu, i) for i in range(1, N + 1))


@dataclass(frozen=True)
class EigenData:
    mu: Composition
    xi: tuple[Fraction, ...]


def e_factor(N: int, kappa0, gamma: Composition, sign: int) -> Fraction:
    """E_+ (sign=+1) or E_- (sign=-1) of gamma."""
    k0 = Fraction(kappa0)
    xs = xi_vector(N, k0, gamma)
    out = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            if gamma[i] < gamma[j]:
                den = xs[j] - xs[i]
                if not den:
                    raise PoleError(k0, f"E factor denominator vanishes for gamma={gamma}")
                out *= 1 + sign * k0 / den
    return out


def rising(a, n: int) -> Fraction:
    out = Fraction(1)
    a = Fraction(a)
    for k in range(n):
        out *= a + k
    return out


def _require_partition(lam):
    if not is_partition(lam):
        raise ValueError(f"{tuple(lam)} is not a partition")


def pochhammer(N: int, kappa0, t, lam: Sequence[int]) -> Fraction:
    """(t)_lambda = prod_i (t - (i-1) kappa0)_{lambda_i}."""
    _require_partition(lam)
    k0, t = Fraction(kappa0), Fraction(t)
    out = Fraction(1)
    for i, part in enumerate(lam):
        out *= rising(t - i * k0, part)
    return out


def hook(lam: Sequence[int], t, kappa0) -> Fraction:
    """h(lambda, t) = prod over cells (i,j) of lambda_i - j + t + kappa0 * #{s > i : j <= lambda_s}."""
    _require_partition(lam)
    k0, t = Fraction(kappa0), Fraction(t)
    lam = tuple(lam)
    out = Fraction(1)
    for i, part in enumerate(lam):
        for j in range(1, part + 1):
            leg = sum(1 for s in range(i + 1, len(lam)) if j <= lam[s])
            out *= part - j + t + k0 * leg
    return out


def chi(i: int, alpha: Sequence[int]) -> Composition:
    """Indicator vector: entry j is 1 when alpha_j >= i."""
    return tuple(1 if a >= i else 0 for a in alpha)


def partition_of(gamma: Sequence[int]) -> Composition:
    return tuple(sorted(gamma, reverse=True))


# ---------------------------------------------------------------------------
# p basis and zeta


@dataclass
class JackContext:
    N: int
    kappa0: Fraction
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.kappa0 = Fraction(self.kappa0)

    def _memo(self, key, build):
        # write-once: a key is never replaced once stored
        if key not in self.cache:
            self.cache.setdefault(key, build())
        return self.cache[key]


def _row_factor(ctx: JackContext, i: int, n: int) -> Polynomial:
    """Coefficient of z_i^n in (1 - y_i z_i)^-1 prod_j (1 - y_j z_i)^-kappa0."""
    N, k0 = ctx.N, ctx.kappa0
    acc: dict = {}
    for a in range(n + 1):
        for b in compositions(n - a, N):
            c = Fraction(1)
            for bj in b:
                c *= rising(k0, bj) / factorial(bj)
            if c:
                e = list(b)
                e[i] += a
                e = tuple(e)
                acc[e] = acc.get(e, 0) + c
    return Polynomial.from_rational_terms(N, 1, acc)


def p_basis(ctx: JackContext, mu: Composition) -> Polynomial:
    mu = tuple(mu)

    def build():
        out = Polynomial.constant(ctx.N, 1, 1)
        for i, n in enumerate(mu):
            if n:
                out = out * ctx._memo(("row", i, n), lambda: _row_factor(ctx, i, n))
        return out

    return ctx._memo(("p", mu), build)


def zeta(ctx: JackContext, mu: Composition) -> Polynomial:
    """zeta_mu with p_mu-coordinate 1."""
    mu = tuple(mu)
    if len(mu) != ctx.N:
        raise ValueError(f"composition {mu} has wrong length for N={ctx.N}")
    w = pole_witness(ctx.kappa0, ctx.N)
    if w is not None:
        raise PoleError(ctx.kappa0, f"{w[0]}*kappa0 + {w[1]} = 0")
    return ctx._memo(("zeta", mu), lambda: _solve_zeta(ctx, mu))


def _solve_zeta(ctx: JackContext, mu: Composition) -> Polynomial:
    n = sum(mu)
    if n == 0:
        return Polynomial.constant(ctx.N, 1, 1)
    span = compositions(n, ctx.N)
    mono = compositions(n, ctx.N)
    mono_index = {e: r for r, e in enumerate(mono)}
    target = xi_vector(ctx.N, ctx.kappa0, mu)
    pvecs = [p_basis(ctx, nu) for nu in span]
    rows: list[list[Fraction]] = []
    for i in range(1, ctx.N + 1):
        block = [[Fraction(0)] * len(span) for _ in mono]
        for col, pv in enumerate(pvecs):
            img = apply_UA(ctx.kappa0, i, pv) - pv.scale(target[i - 1])
            for e, c in img.terms.items():
                block[mono_index[e]][col] = c.rational_value()
        rows.extend(block)
    norm = [Fraction(int(nu == mu)) for nu in span]
    rows.append(norm)
    rhs = [Fraction(0)] * (len(rows) - 1) + [Fraction(1)]
    try:
        coeffs = linalg.solve(rows, rhs)
    except linalg.SingularMatrixError as exc:
        raise PoleError(ctx.kappa0, f"eigen-solve for mu={mu}: {exc}") from None
    out = Polynomial.zero(ctx.N, 1)
    for c, pv in zip(coeffs, pvecs):
        if c:
            out = out + pv.scale(c)
    return out


def zeta_coefficients(ctx: JackContext, mu: Composition) -> dict[Composition, Fraction]:
    """B(nu, mu) in zeta_mu = sum_nu B(nu, mu) p_nu (nonzero entries only)."""
    z = zeta(ctx, mu)
    n = sum(mu)
    span = compositions(n, ctx.N)
    idx = {e: r for r, e in enumerate(span)}
    rows = [[Fraction(0)] * len(span) for _ in span]
    for col, nu in enumerate(span):
        for e, c in p_basis(ctx, nu).terms.items():
            rows[idx[e]][col] = c.rational_value()
    rhs = [z.coefficient(e).rational_value() for e in span]
    coeffs = linalg.solve(rows, rhs)
    return {nu: c for nu, c in zip(span, coeffs) if c}


def eigen_data(ctx: JackContext, mu: Composition) -> EigenData:
    return EigenData(tuple(mu), xi_vector(ctx.N, ctx.kappa0, mu))


# ---------------------------------------------------------------------------
# eigenfunctions of U_i and norms


def is_standard(alpha: Sequence[int]) -> bool:
    return is_partition(alpha)


def _check_parity(alpha, m: int):
    if any(not 0 <= a < m for a in alpha):
        raise ValueError(f"{tuple(alpha)} is not a parity type for m={m}")


def norm_closed_form(ctx: OperatorContext, alpha: Sequence[int], gamma: Sequence[int]) -> Fraction:
    """Closed form of (x^alpha zeta_gamma, x^alpha zeta_gamma)_k for standard alpha."""
    alpha, gamma = tuple(alpha), tuple(gamma)
    _check_parity(alpha, ctx.m)
    if not is_standard(alpha):
        raise ValueError(f"parity type {alpha} is not standard")
    m, N, k = ctx.m, ctx.N, ctx.kappa
    k0 = k[0]
    lam = partition_of(gamma)
    out = Fraction(m) ** (sum(alpha) + m * sum(gamma))
    for i in range(1, m):
        shifted = partition_of(tuple(g + c for g, c in zip(gamma, chi(i, alpha))))
        out *= pochhammer(N, k0, (N - 1) * k0 + Fraction(i, m) + k[i], shifted)
    out *= pochhammer(N, k0, N * k0 + 1, lam)
    out *= hook(lam, k0 + 1, k0) / hook(lam, 1, k0)
    out *= e_factor(N, k0, gamma, +1) * e_factor(N, k0, gamma, -1)
    return out


def x_alpha_g(alpha: Sequence[int], g: Polynomial, m: int) -> Polynomial:
    """x^alpha g(y) with y_i = x_i^m."""
    return _x_times_y(tuple(alpha), g, m)


def eigenvalues_standard(ctx: OperatorContext, alpha: Sequence[int], gamma: Sequence[int]) -> list[Fraction]:
    """Eigenvalue attached to the i-th slot of x^alpha zeta_gamma."""
    m, k, N = ctx.m, ctx.kappa, ctx.N
    out = []
    for i in range(1, N + 1):
        a = alpha[i - 1]
        x = xi(N, k[0], gamma, i)
        if a < m - 1:
            out.append(m * (Fraction(a + 1, m) - 1 + k[a + 1] + x - k[0]))
        else:
            out.append(m * (x - k[0]))
    return out


def eigenfunction(
    ctx: OperatorContext, alpha: Sequence[int], gamma: Sequence[int], w: Sequence[int] | None = None
) -> tuple[Polynomial, list[Fraction]]:
    """w (x^alpha zeta_gamma(y)) and the eigenvalues, entry i belonging to U_{w(i)}.

    ``w`` is 0-based (``w[i]`` is the image of position i); identity if omitted.
    """
    alpha, gamma = tuple(alpha), tuple(gamma)
    _check_parity(alpha, ctx.m)
    if not is_standard(alpha):
        raise ValueError(f"parity type {alpha} is not standard")
    N = ctx.N
    w = tuple(range(N)) if w is None else tuple(w)
    if sorted(w) != list(range(N)):
        raise ValueError(f"{w} is not a permutation")
    for i in range(N):
        for j in range(i + 1, N):
            if alpha[i] == alpha[j] and w[i] > w[j]:
                raise ValueError(f"permutation {w} reverses equal parity entries {i + 1} and {j + 1}")
    z = zeta(JackContext(N, ctx.kappa0), gamma)
    f = x_alpha_g(alpha, z, ctx.m)
    f = _permute_poly(f, w)
    return f, eigenvalues_standard(ctx, alpha, gamma)


def _permute_poly(f: Polynomial, w: Sequence[int]) -> Polynomial:
    return Polynomial._raw(f.nvars, f.m, {permute_composition(tuple(w), e): c for e, c in f.terms.items()})


def eigenfunction_for_type(ctx: OperatorContext, beta: Sequence[int], gamma: Sequence[int]):
    """Eigenfunction of parity type beta (any order): returns (f, w, eigenvalues)."""
    beta = tuple(beta)
    _check_parity(beta, ctx.m)
    alpha, v = sort_to_partition(beta)
    w = [0] * len(v)
    for i, vi in enumerate(v):
        w[vi] = i
    f, vals = eigenfunction(ctx, alpha, gamma, tuple(w))
    return f, tuple(w), vals


# ---------------------------------------------------------------------------
# skew-symmetric polynomials


def vandermonde(N: int) -> Polynomial:
    out = Polynomial.constant(N, 1, 1)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            out = out * (Polynomial.variable(i, N) - Polynomial.variable(j, N))
    return out


def _sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    s = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            s = -s
    return s


def a_delta(ctx: JackContext, lam: Sequence[int] | None = None) -> Polynomial:
    """a_lambda = sum_w sign(w) w zeta_lambda for strictly decreasing lambda (default delta)."""
    N = ctx.N
    lam = tuple(range(N - 1, -1, -1)) if lam is None else tuple(lam)
    if any(a <= b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} must be strictly decreasing")
    z = zeta(ctx, lam)
    out = Polynomial.zero(N, 1)
    for w in permutations(range(N)):
        out = out + _permute_poly(z, w).scale(_sign(w))
    return out


def delta(N: int) -> Composition:
    return tuple(range(N - 1, -1, -1))


def hanlon_polynomial(ctx: OperatorContext, t: int) -> Polynomial:
    """x^{t upsilon} prod_{i<j} (x_i^m - x_j^m)."""
    return x_alpha_g((t,) * ctx.N, vandermonde(ctx.N), ctx.m)


def hanlon_norm(ctx: OperatorContext, t: int) -> tuple[Fraction, Polynomial]:
    """Closed form of (f, f)_k for f = x^{t upsilon} prod_{i<j}(x_i^m - x_j^m), together with f."""
    m, N, k = ctx.m, ctx.N, ctx.kappa
    if not 0 <= t <= m - 1:
        raise ValueError(f"t must lie in [0, {m - 1}]")
    k0 = k[0]
    d = delta(N)
    dv = tuple(a + 1 for a in d)
    out = Fraction(factorial(N)) * Fraction(m) ** (N * t + m * N * (N - 1) // 2)
    for i in range(1, m):
        base = (N - 1) * k0 + Fraction(i, m) + k[i]
        out *= pochhammer(N, k0, base, dv if i <= t else d)
    out *= pochhammer(N, k0, N * k0 + 1, d)
    return out, hanlon_polynomial(ctx, t)
