"""The groups G(m,p,N): elements, action on polynomials, reflections.

An element is a pair (w, c) of a permutation and a phase vector in Z/m.  It
acts on monomials by ``x^alpha -> eta^(c . alpha) x^(w alpha)`` where
``(w alpha)[w(i)] = alpha[i]``.  So ``tau_i^s`` is ``(id, s e_i)`` and a
transposition has zero phases.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Iterator

from .exactnum import CycNumber, as_cyc
from .polyring import Polynomial, permute_composition


@dataclass(frozen=True)
class GroupElement:
    perm: tuple[int, ...]  # 0-based images
    phases: tuple[int, ...]
    m: int

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"not a permutation: {self.perm}")
        if len(self.phases) != len(self.perm):
            raise ValueError("phases and permutation lengths differ")
        object.__setattr__(self, "phases", tuple(c % self.m for c in self.phases))

    @property
    def N(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, N: int, m: int) -> "GroupElement":
        return cls(tuple(range(N)), (0,) * N, m)

    @classmethod
    def transposition(cls, i: int, j: int, N: int, m: int) -> "GroupElement":
        """(i, j) with 1-based indices."""
        perm = list(range(N))
        perm[i - 1], perm[j - 1] = j - 1, i - 1
        return cls(tuple(perm), (0,) * N, m)

    @classmethod
    def tau(cls, i: int, s: int, N: int, m: int) -> "GroupElement":
        """tau_i^s, multiplying x_i by eta^s."""
        phases = [0] * N
        phases[i - 1] = s
        return cls(tuple(range(N)), tuple(phases), m)

    @classmethod
    def from_permutation(cls, perm: Iterable[int], m: int) -> "GroupElement":
        perm = tuple(perm)
        return cls(perm, (0,) * len(perm), m)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (w,c)(v,d) = (wv, d + c o v)
        w, c, v, d = self.perm, self.phases, other.perm, other.phases
        return GroupElement(
            tuple(w[v[i]] for i in range(self.N)),
            tuple(d[i] + c[v[i]] for i in range(self.N)),
            self.m,
        )

    def inverse(self) -> "GroupElement":
        inv = [0] * self.N
        for i, wi in enumerate(self.perm):
            inv[wi] = i
        # (w,c)^-1 = (w^-1, -c o w^-1)
        return GroupElement(tuple(inv), tuple(-self.phases[inv[i]] for i in range(self.N)), self.m)

    def order(self) -> int:
        g, k = self, 1
        e = GroupElement.identity(self.N, self.m)
        while g != e:
            g, k = g * self, k + 1
        return k

    def phase_sum(self) -> int:
        return sum(self.phases) % self.m

    def belongs_to(self, p: int) -> bool:
        return sum(self.phases) % p == 0

    def act_monomial(self, alpha: tuple) -> tuple[int, tuple]:
        """Return (k, beta) with g x^alpha = eta^k x^beta."""
        k = sum(c * a for c, a in zip(self.phases, alpha)) % self.m
        return k, permute_composition(self.perm, alpha)

    def act(self, poly: Polynomial) -> Polynomial:
        m = poly.m
        if self.m != 1 and m % self.m:
            raise ValueError(f"polynomial conductor {m} cannot carry eta_{self.m}")
        step = m // self.m if self.m else 1
        out = {}
        for e, c in poly.terms.items():
            k, b = self.act_monomial(e)
            out[b] = c * CycNumber.root_of_unity_power(m, k * step) if k else c
        return Polynomial._raw(poly.nvars, m, out)

    def __call__(self, poly: Polynomial) -> Polynomial:
        return self.act(poly)

    def __str__(self) -> str:
        return f"perm=[{','.join(str(i + 1) for i in self.perm)}] phases=[{','.join(map(str, self.phases))}]"


def period_two_reflection(i: int, j: int, s: int, N: int, m: int) -> GroupElement:
    """tau_i^{-s} (i,j) tau_i^s, 1-based i < j; acts as eta^{s(a_i - a_j)} x^{(ij) a}."""
    return GroupElement.tau(i, -s, N, m) * GroupElement.transposition(i, j, N, m) * GroupElement.tau(i, s, N, m)


def reflections(m: int, p: int, N: int) -> list[GroupElement]:
    """All reflections of G(m,p,N): period-2 ones by (i,j,s), then diagonal ones by (i,s)."""
    if m % p:
        raise ValueError(f"p={p} does not divide m={m}")
    out = [
        period_two_reflection(i, j, s, N, m)
        for i in range(1, N + 1)
        for j in range(i + 1, N + 1)
        for s in range(m)
    ]
    q = m // p
    out += [GroupElement.tau(i, s * p, N, m) for i in range(1, N + 1) for s in range(1, q)]
    return out


def group_elements(m: int, p: int, N: int) -> Iterator[GroupElement]:
    """Enumerate G(m,p,N) (m^N N!/p elements)."""
    for perm in permutations(range(N)):
        for phases in product(range(m), repeat=N):
            if sum(phases) % p == 0:
                yield GroupElement(perm, phases, m)


def generators(m: int, p: int, N: int) -> list[GroupElement]:
    """(i,i+1), tau_1^p and tau_1^{-1} tau_2; these generate G(m,p,N)."""
    gens = [GroupElement.transposition(i, i + 1, N, m) for i in range(1, N)]
    if m // p > 1 or N == 1:
        gens.append(GroupElement.tau(1, p, N, m))
    if N >= 2 and m > 1:
        gens.append(GroupElement.tau(1, -1, N, m) * GroupElement.tau(2, 1, N, m))
    return [g for g in gens if g != GroupElement.identity(N, m)]


def projection_pi(j: int, s: int, poly: Polynomial, m: int) -> Polynomial:
    """pi_j(s): keep the terms whose j-th exponent is congruent to s mod m."""
    if not 1 <= j <= poly.nvars:
        raise ValueError(f"index {j} out of range 1..{poly.nvars}")
    k = j - 1
    return Polynomial._raw(poly.nvars, poly.m, {e: c for e, c in poly.terms.items() if (e[k] - s) % m == 0})


def lambda_apply(r: int, t: int, poly: Polynomial, m: int) -> Polynomial:
    """sum_s tau_r^{-s} (r,t) tau_r^s applied to poly."""
    if r == t:
        raise ValueError("lambda_rt needs r != t")
    a, b = r - 1, t - 1
    out = {}
    for e, c in poly.terms.items():
        if (e[a] - e[b]) % m == 0:
            f = list(e)
            f[a], f[b] = f[b], f[a]
            out[tuple(f)] = c.scale(m)
    return Polynomial._raw(poly.nvars, poly.m, out)


@dataclass(frozen=True)
class GroupAlgebraOp:
    """A finite formal sum of scalar multiples of group elements."""

    terms: tuple[tuple[CycNumber, GroupElement], ...]

    def apply(self, poly: Polynomial) -> Polynomial:
        out = Polynomial.zero(poly.nvars, poly.m)
        for c, g in self.terms:
            out = out + g.act(poly).scale(as_cyc(poly.m, c))
        return out

    @classmethod
    def lambda_op(cls, r: int, t: int, N: int, m: int) -> "GroupAlgebraOp":
        one = CycNumber.one(m)
        return cls(tuple((one, period_two_reflection(r, t, s, N, m)) for s in range(m)))


def reynolds(poly: Polynomial, m: int, p: int) -> Polynomial:
    """Average over G(m,p,N); projects onto invariants."""
    N = poly.nvars
    total = Polynomial.zero(N, poly.m)
    count = 0
    for g in group_elements(m, p, N):
        total = total + g.act(poly)
        count += 1
    return total.scale(Fraction(1, count))
