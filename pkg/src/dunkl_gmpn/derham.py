"""Polynomial differential forms, the deformed differential d(k), the Koszul
differential, the deformed Euler operator on forms, and the intertwiner V(k).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from . import linalg
from .dunkl import OperatorContext, apply_T, euler_apply, t_monomial
from .exactnum import CycNumber, as_cyc, make_params
from .group import GroupElement, reflections
from .polyring import Composition, Polynomial, compositions

Key = tuple  # (exponent, subset)


class SingularParameterError(ArithmeticError):
    def __init__(self, degree: int, detail: str = ""):
        super().__init__(f"singular parameter: E(k) is not invertible on the degree-{degree} block" + (f" ({detail})" if detail else ""))
        self.degree = degree


class InvariantViolation(AssertionError):
    """An internal invariant failed; this points to a bug, not to bad input."""


def _wedge_sign(i: int, subset: tuple) -> int | None:
    """Sign of dx_i ^ dx_S after sorting, or None when i is in S."""
    if i in subset:
        return None
    return -1 if sum(1 for s in subset if s < i) % 2 else 1


class DifferentialForm:
    """Sparse element of P (x) Lambda^l; subsets are sorted 0-based index tuples."""

    __slots__ = ("nvars", "m", "terms")

    def __init__(self, nvars: int, m: int = 1, terms: Mapping | None = None):
        clean = {}
        for (exp, sub), c in (terms or {}).items():
            exp, sub = tuple(exp), tuple(sub)
            if list(sub) != sorted(set(sub)):
                raise ValueError(f"index subset {sub} must be strictly increasing")
            c = as_cyc(m, c)
            if c:
                clean[(exp, sub)] = c
        self.nvars, self.m, self.terms = nvars, m, clean

    @classmethod
    def _raw(cls, nvars: int, m: int, terms: dict) -> "DifferentialForm":
        obj = object.__new__(cls)
        obj.nvars, obj.m, obj.terms = nvars, m, terms
        return obj

    @classmethod
    def from_accumulator(cls, nvars, m, acc) -> "DifferentialForm":
        return cls._raw(nvars, m, {k: v for k, v in acc.items() if v})

    @classmethod
    def from_polynomial(cls, p: Polynomial, subset: Sequence[int] = ()) -> "DifferentialForm":
        """p dx_{subset}; subset given 1-based."""
        sub = tuple(sorted(i - 1 for i in subset))
        return cls._raw(p.nvars, p.m, {(e, sub): c for e, c in p.terms.items()})

    @classmethod
    def zero(cls, nvars: int, m: int = 1) -> "DifferentialForm":
        return cls._raw(nvars, m, {})

    def component(self, subset: Sequence[int]) -> Polynomial:
        """Coefficient polynomial of dx_subset (0-based sorted subset)."""
        sub = tuple(subset)
        return Polynomial._raw(self.nvars, self.m, {e: c for (e, s), c in self.terms.items() if s == sub})

    def subsets(self) -> list[tuple]:
        return sorted({s for _, s in self.terms})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self.nvars == other.nvars and self.m == other.m and self.terms == other.terms

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return DifferentialForm.from_accumulator(self.nvars, self.m, acc)

    def __neg__(self):
        return DifferentialForm._raw(self.nvars, self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DifferentialForm":
        if isinstance(c, CycNumber):
            return DifferentialForm.from_accumulator(self.nvars, self.m, {k: v * c for k, v in self.terms.items()})
        return DifferentialForm.from_accumulator(self.nvars, self.m, {k: v.scale(c) for k, v in self.terms.items()})

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(len(s), sum(e)) for e, s in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for s in self.subsets():
            wedge = "^".join(f"dx{i + 1}" for i in s) or "1"
            parts.append(f"({self.component(s)}) {wedge}")
        return " + ".join(parts)

    __repr__ = __str__


def _add(acc: dict, key, value):
    prev = acc.get(key)
    acc[key] = value if prev is None else prev + value


def d_k(ctx: OperatorContext, omega: DifferentialForm) -> DifferentialForm:
    """d(k)(p dx_S) = sum_i (T_i p) dx_i ^ dx_S."""
    acc: dict = {}
    kappa = ctx.kappa.kappa
    for (e, sub), c in omega.terms.items():
        for i in range(ctx.N):
            sign = _wedge_sign(i, sub)
            if sign is None:
                continue
            new_sub = tuple(sorted(sub + (i,)))
            for f, q in t_monomial(i, e, ctx.m, kappa):
                _add(acc, (f, new_sub), c.scale(sign * q))
    return DifferentialForm.from_accumulator(omega.nvars, omega.m, acc)


def d_zero(omega: DifferentialForm) -> DifferentialForm:
    """The undeformed differential."""
    acc: dict = {}
    for (e, sub), c in omega.terms.items():
        for i in range(omega.nvars):
            if not e[i]:
                continue
            sign = _wedge_sign(i, sub)
            if sign is None:
                continue
            f = e[:i] + (e[i] - 1,) + e[i + 1:]
            _add(acc, (f, tuple(sorted(sub + (i,)))), c.scale(sign * e[i]))
    return DifferentialForm.from_accumulator(omega.nvars, omega.m, acc)


def koszul(omega: DifferentialForm) -> DifferentialForm:
    """sum_r (-1)^(r+1) x_{i_r} p (omit dx_{i_r}), r counted from 1."""
    acc: dict = {}
    for (e, sub), c in omega.terms.items():
        for r, i in enumerate(sub):
            f = e[:i] + (e[i] + 1,) + e[i + 1:]
            new_sub = sub[:r] + sub[r + 1:]
            _add(acc, (f, new_sub), c if r % 2 == 0 else -c)
    return DifferentialForm.from_accumulator(omega.nvars, omega.m, acc)


def euler_form(ctx: OperatorContext, omega: DifferentialForm) -> DifferentialForm:
    """partial d(k) + d(k) partial."""
    return koszul(d_k(ctx, omega)) + d_k(ctx, koszul(omega))


# ---------------------------------------------------------------------------
# the group acting on forms, and the central element z(k)


def act_form(g: GroupElement, omega: DifferentialForm) -> DifferentialForm:
    """g(p dx_S): dx_i transforms like x_i."""
    m = omega.m
    step = m // g.m
    acc: dict = {}
    for (e, sub), c in omega.terms.items():
        k = sum(ph * a for ph, a in zip(g.phases, e)) + sum(g.phases[i] for i in sub)
        f = tuple(_permute(g.perm, e))
        images = [g.perm[i] for i in sub]
        sign = _sort_sign(images)
        v = c * CycNumber.root_of_unity_power(m, (k % g.m) * step) if k % g.m else c
        _add(acc, (f, tuple(sorted(images))), v if sign > 0 else -v)
    return DifferentialForm.from_accumulator(omega.nvars, m, acc)


def _permute(perm, e):
    out = [0] * len(e)
    for i, a in enumerate(e):
        out[perm[i]] = a
    return out


def _sort_sign(seq: list[int]) -> int:
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def z_apply(ctx: OperatorContext, omega: DifferentialForm) -> DifferentialForm:
    """z(k) = kappa_0 sum_sigma (1 - sigma) over period-2 reflections + sum_i sum_t m kappa_t pi_i(t) on forms."""
    m, N = ctx.m, ctx.N
    out = DifferentialForm.zero(omega.nvars, omega.m)
    k0 = ctx.kappa0
    if k0 and N > 1:
        refl = [g for g in reflections(m, 1, N) if g.perm != tuple(range(N))]
        acc = omega.scale(len(refl))
        for g in refl:
            acc = acc - act_form(g, omega)
        out = out + acc.scale(k0)
    acc2: dict = {}
    for (e, sub), c in omega.terms.items():
        total = Fraction(0)
        for i in range(N):
            t = (e[i] + (1 if i in sub else 0)) % m
            if t:
                total += m * ctx.kappa[t]
        if total:
            acc2[(e, sub)] = c.scale(total)
    return out + DifferentialForm.from_accumulator(omega.nvars, omega.m, acc2)


def euler_diagonal(ctx: OperatorContext, omega: DifferentialForm) -> DifferentialForm:
    """(l + |alpha|) omega + z(k) omega, computed without d(k)."""
    acc = {k: v.scale(len(k[1]) + sum(k[0])) for k, v in omega.terms.items()}
    return DifferentialForm.from_accumulator(omega.nvars, omega.m, acc) + z_apply(ctx, omega)


# ---------------------------------------------------------------------------
# the intertwiner


def form_basis(N: int, l: int, degree: int) -> list[Key]:
    return [(e, s) for s in combinations(range(N), l) for e in compositions(degree, N)]


@dataclass
class IntertwinerTable:
    ctx: OperatorContext
    max_degree: int
    # blocks[n][beta] = V(x^beta)
    blocks: dict[int, dict[Composition, Polynomial]] = field(default_factory=dict)

    def apply(self, p: Polynomial) -> Polynomial:
        out = Polynomial.zero(p.nvars, p.m)
        for e, c in p.terms.items():
            out = out + self.blocks[sum(e)][e].scale(c)
        return out

    def matrix(self, degree: int) -> list[list[CycNumber]]:
        """Columns are V(x^beta) over the monomial basis of P_degree."""
        basis = compositions(degree, self.ctx.N)
        cols = [self.blocks[degree][b] for b in basis]
        return [[col.coefficient(a) for col in cols] for a in basis]

    def is_identity(self) -> bool:
        return all(v == Polynomial.monomial(b, self.ctx.m) for blk in self.blocks.values() for b, v in blk.items())


def _apply_V_form(table: IntertwinerTable, omega: DifferentialForm) -> DifferentialForm:
    out = DifferentialForm.zero(omega.nvars, omega.m)
    for sub in omega.subsets():
        out = out + DifferentialForm._raw(
            omega.nvars, omega.m, {(e, sub): c for e, c in table.apply(omega.component(sub)).terms.items()}
        )
    return out


def euler_block_matrix(ctx: OperatorContext, l: int, degree: int, basis: Sequence[Key] | None = None):
    basis = list(basis) if basis is not None else form_basis(ctx.N, l, degree)
    index = {k: r for r, k in enumerate(basis)}
    mat = [[CycNumber.zero(ctx.m) for _ in basis] for _ in basis]
    for col, (e, s) in enumerate(basis):
        img = euler_form(ctx, DifferentialForm._raw(ctx.N, ctx.m, {(e, s): CycNumber.one(ctx.m)}))
        for k, v in img.terms.items():
            mat[index[k]][col] = v
    return basis, mat


def build_intertwiner(ctx: OperatorContext, max_degree: int, basis_seed: int | None = None) -> IntertwinerTable:
    """Build V(k) degree by degree: V(p) = koszul(E(k)^{-1} V(d(0) p)).

    ``basis_seed`` shuffles the basis orders used in the linear solves; the
    resulting table must not depend on it.
    """
    rng = random.Random(basis_seed) if basis_seed is not None else None
    N, m = ctx.N, ctx.m
    table = IntertwinerTable(ctx, max_degree)
    table.blocks[0] = {(0,) * N: Polynomial.constant(N, m, 1)}
    for n in range(1, max_degree + 1):
        kbasis = form_basis(N, 1, n - 1)
        pbasis = list(compositions(n, N))
        if rng is not None:
            rng.shuffle(kbasis)
            rng.shuffle(pbasis)
        kbasis, emat = euler_block_matrix(ctx, 1, n - 1, kbasis)
        index = {k: r for r, k in enumerate(kbasis)}
        block = {}
        for beta in pbasis:
            omega = _apply_V_form(table, d_zero(DifferentialForm.from_polynomial(Polynomial.monomial(beta, m))))
            rhs = [CycNumber.zero(m) for _ in kbasis]
            for k, v in omega.terms.items():
                rhs[index[k]] = v
            try:
                sol = linalg.solve(emat, rhs)
            except linalg.SingularMatrixError as exc:
                raise SingularParameterError(n, str(exc)) from None
            eta = DifferentialForm.from_accumulator(N, m, {k: v for k, v in zip(kbasis, sol)})
            block[beta] = koszul(eta).component(())
        table.blocks[n] = {b: block[b] for b in compositions(n, N)}
    return table


def check_intertwining(table: IntertwinerTable) -> list[tuple[int, Composition]]:
    """Return (i, beta) pairs where T_i V x^beta != V d_i x^beta (empty when all hold)."""
    ctx = table.ctx
    bad = []
    for n in range(1, table.max_degree + 1):
        for beta, vb in table.blocks[n].items():
            for i in range(1, ctx.N + 1):
                lhs = apply_T(ctx, i, vb)
                rhs = table.apply(Polynomial.monomial(beta, ctx.m).partial(i))
                if lhs != rhs:
                    bad.append((i, beta))
    return bad


# ---------------------------------------------------------------------------
# z(k) spectrum on P_n


def _z_matrix(ctx: OperatorContext, degree: int) -> list[list[Fraction]]:
    basis = compositions(degree, ctx.N)
    index = {e: r for r, e in enumerate(basis)}
    mat = [[Fraction(0)] * len(basis) for _ in basis]
    for col, e in enumerate(basis):
        x = Polynomial.monomial(e, ctx.m)
        img = euler_apply(ctx, x) - x.scale(degree)
        for f, c in img.terms.items():
            mat[index[f]][col] = c.rational_value()
    return mat


def _integer_eigenvalues(mat: list[list[Fraction]]) -> list[int]:
    bound = max((sum(abs(x) for x in row) for row in mat), default=0)
    bound = int(bound) + 1
    found = []
    for lam in range(-bound, bound + 1):
        shifted = [[x - (lam if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(mat)]
        if linalg.corank(shifted):
            found.append(lam)
    return found


def z_spectrum(ctx: OperatorContext, degree: int) -> list[tuple[tuple[int, ...], int]]:
    """Joint spectrum of z(k) on P_degree as linear forms in the free parameters.

    Returns ``(coefficients, multiplicity)`` where the eigenvalue is
    ``sum_s coefficients[s] * kappa_s`` over kappa_0, kappa_1 .. kappa_{m/p-1}.
    """
    q = ctx.m // ctx.p
    dim = len(compositions(degree, ctx.N))
    mats = []
    for s in range(q):
        unit = [0] * q
        unit[s] = 1
        mats.append(_z_matrix(ctx.with_kappa(make_params(ctx.m, ctx.p, unit)), degree))
    per = []
    for s, mat in enumerate(mats):
        vals = _integer_eigenvalues(mat)
        if any(v < 0 for v in vals):
            raise InvariantViolation(f"negative eigenvalue {min(vals)} of z at unit tuple {s}, degree {degree}")
        per.append(vals)
    out = []
    total = 0
    for combo in product(*per):
        stacked = []
        for lam, mat in zip(combo, mats):
            stacked += [[x - (lam if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(mat)]
        mult = linalg.corank(stacked)
        if mult:
            out.append((tuple(combo), mult))
            total += mult
    if total != dim:
        raise InvariantViolation(
            f"integer joint eigenspaces of z cover {total} of {dim} dimensions at degree {degree}"
        )
    return sorted(out)


def format_linear_form(coeffs: Iterable[int]) -> str:
    parts = [f"{c}*k{s}" for s, c in enumerate(coeffs) if c]
    return " + ".join(parts) if parts else "0"
