"""Singular parameters: the explicit sets K_0 and K_1, the Gram-corank oracle,
singular polynomials, and verifiers for the shift identities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import linalg
from .dunkl import OperatorContext, apply_T, apply_T_power, apply_operator_polynomial, gram_matrix, pairing
from .exactnum import ParamTuple, format_rational, make_params
from .group import generators
from .jack import vandermonde, x_alpha_g
from .polyring import Polynomial, compositions, x_to_y

# ---------------------------------------------------------------------------
# K_1


@dataclass(frozen=True)
class K1Witness:
    n: int
    i: int
    value: Fraction  # n kappa_0 + i/m + kappa_i, a nonpositive integer

    def predicted_degree(self, N: int, m: int) -> int:
        """Degree of x^alpha zeta_lambda whose norm picks up the vanishing factor."""
        r = int(-self.value)
        return (N - self.n) * (self.i + m * r)


def k1_witnesses(kappa: ParamTuple, N: int) -> list[K1Witness]:
    m = kappa.m
    out = []
    for i in range(1, m):
        for n in range(N):
            v = n * kappa[0] + Fraction(i, m) + kappa[i]
            if v <= 0 and v.denominator == 1:
                out.append(K1Witness(n, i, v))
    return out


def in_K1(kappa: ParamTuple, N: int, m: int | None = None) -> tuple[bool, K1Witness | None]:
    """Membership in K_1 with the witness of smallest predicted degree."""
    if m is not None and m != kappa.m:
        raise ValueError("m does not match the parameter tuple")
    ws = k1_witnesses(kappa, N)
    if not ws:
        return False, None
    return True, min(ws, key=lambda w: (w.predicted_degree(N, kappa.m), w.n, w.i))


# ---------------------------------------------------------------------------
# K_0


@dataclass(frozen=True)
class K0Table:
    """Index ranges (j, n) with kappa_0 = -j/n - l, l >= 0."""

    name: str
    pairs: Callable[[int], Iterator[tuple[int, int]]]


def _literal_pairs(N: int):
    # 2 <= j - 1 <= n <= N
    for n in range(2, N + 1):
        for j in range(3, n + 2):
            yield j, n


def _type_a_pairs(N: int):
    # 1 <= j <= n - 1, 2 <= n <= N
    for n in range(2, N + 1):
        for j in range(1, n):
            yield j, n


LITERAL_K0 = K0Table("literal", _literal_pairs)
TYPE_A_K0 = K0Table("type-a", _type_a_pairs)


def in_K0(kappa: ParamTuple, N: int, m: int | None = None, table: K0Table = LITERAL_K0):
    """Returns (member, witness (j, n, l) or None) under the chosen table."""
    k0 = kappa[0]
    if k0 >= 0:
        return False, None
    for j, n in table.pairs(N):
        l = -k0 - Fraction(j, n)
        if l >= 0 and l.denominator == 1:
            return True, (j, n, int(l))
    return False, None


# ---------------------------------------------------------------------------
# oracle


def gram_corank_oracle(ctx: OperatorContext, up_to_degree: int) -> list[tuple[int, int]]:
    """(degree, corank of the Gram matrix) for degrees 1..up_to_degree."""
    return [(n, linalg.corank(gram_matrix(ctx, n))) for n in range(1, up_to_degree + 1)]


def radical_basis(ctx: OperatorContext, degree: int) -> list[Polynomial]:
    """Basis of {q in P_degree : T_i q = 0 for all i}."""
    if degree <= 0:
        return []
    basis = compositions(degree, ctx.N)
    lower = {e: r for r, e in enumerate(compositions(degree - 1, ctx.N))}
    rows = []
    for i in range(1, ctx.N + 1):
        block = [[Fraction(0)] * len(basis) for _ in lower]
        for col, e in enumerate(basis):
            for f, c in apply_T(ctx, i, Polynomial.monomial(e, ctx.m)).terms.items():
                block[lower[f]][col] = c.rational_value()
        rows.extend(block)
    out = []
    for v in linalg.nullspace(rows, len(basis)):
        out.append(Polynomial(ctx.N, ctx.m, {e: c for e, c in zip(basis, v) if c}))
    return out


@dataclass
class SingularReport:
    kappa: ParamTuple
    N: int
    in_K0: bool
    k0_witness: tuple | None
    in_K1: bool
    k1_witness: K1Witness | None
    oracle_degree_checked: int
    oracle_corank_by_degree: list = field(default_factory=list)
    k0_table: str = LITERAL_K0.name

    @property
    def oracle_singular(self) -> bool:
        return any(c for _, c in self.oracle_corank_by_degree)

    @property
    def confirmed(self) -> bool:
        """A positive K_0/K_1 answer backed by a nonzero corank."""
        return (self.in_K0 or self.in_K1) and self.oracle_singular

    def to_json(self) -> dict:
        w = self.k1_witness
        return {
            "kappa": [format_rational(k) for k in self.kappa.kappa],
            "K0": self.in_K0,
            "K0_table": self.k0_table,
            "K0_witness": list(self.k0_witness) if self.k0_witness else None,
            "K1": {"member": self.in_K1, "witness": [w.n, w.i] if w else None},
            "confirmed": self.confirmed,
            "oracle": [{"degree": n, "corank": c} for n, c in self.oracle_corank_by_degree],
        }


def singular_report(ctx: OperatorContext, up_to_degree: int, table: K0Table = LITERAL_K0) -> SingularReport:
    k0m, k0w = in_K0(ctx.kappa, ctx.N, table=table)
    k1m, k1w = in_K1(ctx.kappa, ctx.N)
    return SingularReport(
        ctx.kappa, ctx.N, k0m, k0w, k1m, k1w, up_to_degree, gram_corank_oracle(ctx, up_to_degree), table.name
    )


# ---------------------------------------------------------------------------
# shift identities


class HypothesisError(ValueError):
    """Inputs do not satisfy the hypotheses of the identity being verified."""


@dataclass
class ShiftReport:
    kind: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"kind": self.kind, "cases": self.cases, "passed": self.passed, "failures": self.failures}


def shift_full(kappa: ParamTuple, t: int) -> ParamTuple:
    """kappa_1 .. kappa_t increased by 1 in the full (G(m,1,N)) tuple."""
    k = list(kappa.kappa)
    for s in range(1, t + 1):
        k[s] += 1
    return ParamTuple(kappa.m, 1, tuple(k))


def shift_free(kappa: ParamTuple, t: int) -> ParamTuple:
    """Free kappa_1 .. kappa_t increased by 1/p, periodicity kept."""
    free = list(kappa.free)
    for s in range(1, t + 1):
        free[s] += Fraction(1, kappa.p)
    return make_params(kappa.m, kappa.p, free)


def shift_kappa0(kappa: ParamTuple) -> ParamTuple:
    free = list(kappa.free)
    free[0] += 1
    return make_params(kappa.m, kappa.p, free)


def parameters_plus_one(kappa: ParamTuple, N: int) -> ParamTuple:
    """k + 1 in the per-orbit normalization, written back in kappa coordinates.

    The period-2 orbit (present when N >= 2) moves kappa_0 by 1; the diagonal
    orbit (present when m/p > 1) moves each free kappa_i by 1/p, since
    p kappa_i is the per-orbit parameter.
    """
    free = list(kappa.free)
    if N >= 2:
        free[0] += 1
    for s in range(1, len(free)):
        free[s] += Fraction(1, kappa.p)
    return make_params(kappa.m, kappa.p, free)


def _require_y(g: Polynomial, m: int, what: str):
    try:
        x_to_y(g, m)
    except ValueError:
        raise HypothesisError(f"{what} must be a polynomial in y = x^m") from None


def _require_symmetric(g: Polynomial, what: str):
    from .dunkl import transpose_poly

    for i in range(1, g.nvars):
        if transpose_poly(g, i, i + 1) != g:
            raise HypothesisError(f"{what} is not symmetric")


def _require_invariant(g: Polynomial, m: int, p: int, what: str):
    for h in generators(m, p, g.nvars):
        if h.act(g) != g:
            raise HypothesisError(f"{what} is not invariant under {h}")


def _power(ctx: OperatorContext, i: int, k: int, poly: Polynomial) -> Polynomial:
    e = [0] * ctx.N
    e[i - 1] = k
    return apply_T_power(ctx, tuple(e), poly)


def verify_shift(kind: str, ctx: OperatorContext, test_inputs: Sequence) -> ShiftReport:
    """Check one of the shift identities on the supplied cases.

    kinds and case shapes:
      cyclic-full  (t, g):     T_i(k)^m x^{t v} g = x^{t v} T_i(k')^m g, k' = kappa_1..kappa_t + 1
      cyclic-p     (t, s, g):  T_i(k)^{m/p} x^{(t + s m/p) v} g = x^{t v} T_i(k')^{m/p} x^{(s m/p) v} g
      symmetric    (f, g):     f(T(k)) a_delta g = a_delta f(T(k')) g, k' = kappa_0 + 1
      corollary    (p, q):     (pi p, pi q)_k = (pi, pi)_k (p, q)_{k+1}, pi = x^{(m/p - 1) v} a_delta
    """
    m, p, N = ctx.m, ctx.p, ctx.N
    q = m // p
    rep = ShiftReport(kind)
    ups = lambda k: (k,) * N  # noqa: E731
    if kind == "cyclic-full":
        checked = []
        for t, g in test_inputs:
            if not 1 <= t <= m - 1:
                raise HypothesisError(f"t={t} outside 1..{m - 1}")
            _require_y(g, m, "g")
            checked.append((t, g))
        full = OperatorContext(m, 1, N, ParamTuple(m, 1, ctx.kappa.kappa))
        for t, g in checked:
            shifted = full.with_kappa(shift_full(full.kappa, t))
            lhs_in = g.mul_monomial(ups(t))
            for i in range(1, N + 1):
                lhs = _power(full, i, m, lhs_in)
                rhs = _power(shifted, i, m, g).mul_monomial(ups(t))
                rep.cases += 1
                if lhs != rhs:
                    rep.failures.append({"t": t, "i": i, "g": g.to_text()})
    elif kind == "cyclic-p":
        checked = []
        for t, s, g in test_inputs:
            if not 1 <= t <= q - 1:
                raise HypothesisError(f"t={t} outside 1..{q - 1}")
            if not 0 <= s <= p - 1:
                raise HypothesisError(f"s={s} outside 0..{p - 1}")
            _require_y(g, m, "g")
            checked.append((t, s, g))
        for t, s, g in checked:
            shifted = ctx.with_kappa(shift_free(ctx.kappa, t))
            lhs_in = g.mul_monomial(ups(t + s * q))
            rhs_in = g.mul_monomial(ups(s * q))
            for i in range(1, N + 1):
                lhs = _power(ctx, i, q, lhs_in)
                rhs = _power(shifted, i, q, rhs_in).mul_monomial(ups(t))
                rep.cases += 1
                if lhs != rhs:
                    rep.failures.append({"t": t, "s": s, "i": i, "g": g.to_text()})
    elif kind == "symmetric":
        checked = []
        for f, g in test_inputs:
            for poly, name in ((f, "f"), (g, "g")):
                _require_y(poly, m, name)
                _require_symmetric(poly, name)
            checked.append((f, g))
        a = x_alpha_g((0,) * N, vandermonde(N), m)
        shifted = ctx.with_kappa(shift_kappa0(ctx.kappa))
        for f, g in checked:
            lhs = apply_operator_polynomial(ctx, f, a * g)
            rhs = a * apply_operator_polynomial(shifted, f, g)
            rep.cases += 1
            if lhs != rhs:
                rep.failures.append({"f": f.to_text(), "g": g.to_text()})
    elif kind == "corollary":
        checked = []
        for pp, qq in test_inputs:
            _require_invariant(pp, m, p, "p")
            _require_invariant(qq, m, p, "q")
            checked.append((pp, qq))
        pi = x_alpha_g(ups(q - 1), vandermonde(N), m)
        plus = ctx.with_kappa(parameters_plus_one(ctx.kappa, N))
        pipi = pairing(ctx, pi, pi)
        for pp, qq in checked:
            lhs = pairing(ctx, pi * pp, pi * qq)
            rhs = pipi * pairing(plus, pp, qq)
            rep.cases += 1
            if lhs != rhs:
                rep.failures.append({"p": pp.to_text(), "q": qq.to_text(), "lhs": str(lhs), "rhs": str(rhs)})
    else:
        raise ValueError(f"unknown shift kind {kind!r}")
    return rep
