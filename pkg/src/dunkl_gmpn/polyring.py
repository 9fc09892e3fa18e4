"""Sparse polynomials in x_1..x_N over Q(eta_m), compositions and dominance order.

Exponent vectors are plain tuples of ints.  Variable indices in the public API
are 1-based (x1 .. xN), matching the usual notation; composition entries are
ordinary 0-based tuples.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, Mapping

from .exactnum import ConductorMismatch, CycNumber, as_cyc, format_rational, parse_rational

Composition = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# compositions


@lru_cache(maxsize=None)
def compositions(n: int, N: int) -> tuple[Composition, ...]:
    """All compositions of n into N nonnegative parts, in lexicographically decreasing order."""
    if N == 0:
        return ((),) if n == 0 else ()
    if N == 1:
        return ((n,),)
    out = []
    for first in range(n, -1, -1):
        for rest in compositions(n - first, N - 1):
            out.append((first,) + rest)
    return tuple(out)


def compositions_upto(n: int, N: int) -> list[Composition]:
    return [c for d in range(n + 1) for c in compositions(d, N)]


def is_partition(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return all(a >= b for a, b in zip(lam, lam[1:])) and all(a >= 0 for a in lam)


def partial_sums_geq(mu: Composition, nu: Composition) -> bool:
    return all(a >= b for a, b in zip(accumulate(mu), accumulate(nu)))


def dominance_greater(mu: Composition, nu: Composition) -> bool:
    """mu |> nu: same size, and mu+ > nu+ in dominance, or mu+ == nu+ and mu > nu."""
    if len(mu) != len(nu) or sum(mu) != sum(nu) or mu == nu:
        return False
    mp = tuple(sorted(mu, reverse=True))
    np_ = tuple(sorted(nu, reverse=True))
    if mp != np_:
        return partial_sums_geq(mp, np_)
    return partial_sums_geq(mu, nu)


def sort_to_partition(gamma: Composition) -> tuple[Composition, tuple[int, ...]]:
    """Return (gamma+, w) with w gamma = gamma+, w stable on equal entries.

    ``w`` is given 0-based: ``w[i]`` is the image of position i, and the action
    is ``(w gamma)[w[i]] = gamma[i]``.
    """
    order = sorted(range(len(gamma)), key=lambda i: (-gamma[i], i))
    w = [0] * len(gamma)
    for k, i in enumerate(order):
        w[i] = k
    return tuple(gamma[i] for i in order), tuple(w)


def permute_composition(w: tuple[int, ...], alpha: Composition) -> Composition:
    out = [0] * len(alpha)
    for i, a in enumerate(alpha):
        out[w[i]] = a
    return tuple(out)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to CycNumber."""

    __slots__ = ("nvars", "m", "terms")

    def __init__(self, nvars: int, m: int = 1, terms: Mapping | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            c = as_cyc(m, c)
            if c:
                clean[exp] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, nvars: int, m: int, terms: dict) -> "Polynomial":
        # terms must already hold nonzero CycNumbers of conductor m
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def from_accumulator(cls, nvars: int, m: int, acc: Mapping) -> "Polynomial":
        """Build from a dict of exponent -> CycNumber, dropping zeros."""
        return cls._raw(nvars, m, {e: c for e, c in acc.items() if c})

    @classmethod
    def from_rational_terms(cls, nvars: int, m: int, acc: Mapping) -> "Polynomial":
        """Build from a dict of exponent -> Fraction."""
        return cls._raw(nvars, m, {e: CycNumber.from_rational(m, c) for e, c in acc.items() if c})

    @classmethod
    def zero(cls, nvars: int, m: int = 1) -> "Polynomial":
        return cls._raw(nvars, m, {})

    @classmethod
    def constant(cls, nvars: int, m: int, c) -> "Polynomial":
        return cls(nvars, m, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Composition, m: int = 1, c=1) -> "Polynomial":
        return cls(len(exp), m, {tuple(exp): c})

    @classmethod
    def variable(cls, i: int, nvars: int, m: int = 1) -> "Polynomial":
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls.monomial(tuple(exp), m)

    # -- inspection -------------------------------------------------------
    def __iter__(self) -> Iterator[tuple[Composition, CycNumber]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exp: Composition) -> CycNumber:
        return self.terms.get(tuple(exp), CycNumber.zero(self.m))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict] = defaultdict(dict)
        for e, c in self.terms.items():
            parts[sum(e)][e] = c
        return {d: Polynomial._raw(self.nvars, self.m, t) for d, t in sorted(parts.items())}

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, self.m, {e: c for e, c in self.terms.items() if sum(e) == d})

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if other.m != self.m:
            raise ConductorMismatch(f"conductor mismatch: {self.m} vs {other.m}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.nvars, self.m, other)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            prev = acc.get(e)
            acc[e] = c if prev is None else prev + c
        return Polynomial.from_accumulator(self.nvars, self.m, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        if not isinstance(c, CycNumber):
            c = Fraction(c)
            if not c:
                return Polynomial.zero(self.nvars, self.m)
            return Polynomial._raw(self.nvars, self.m, {e: v.scale(c) for e, v in self.terms.items()})
        c = as_cyc(self.m, c)
        return Polynomial.from_accumulator(self.nvars, self.m, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                prev = acc.get(e)
                acc[e] = prod if prev is None else prev + prod
        return Polynomial.from_accumulator(self.nvars, self.m, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "Polynomial":
        out = Polynomial.constant(self.nvars, self.m, 1)
        for _ in range(n):
            out = out * self
        return out

    def mul_monomial(self, exp: Composition, c=None) -> "Polynomial":
        """Multiply by x^exp (and optionally a scalar)."""
        terms = {tuple(a + b for a, b in zip(e, exp)): v for e, v in self.terms.items()}
        out = Polynomial._raw(self.nvars, self.m, terms)
        return out if c is None else out.scale(c)

    def partial(self, i: int) -> "Polynomial":
        """d/dx_i (1-based)."""
        k = i - 1
        acc = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = e[:k] + (e[k] - 1,) + e[k + 1:]
                acc[ne] = c.scale(e[k])
        return Polynomial._raw(self.nvars, self.m, acc)

    def evaluate_at_zero(self) -> CycNumber:
        return self.coefficient((0,) * self.nvars)

    def conjugate_coefficients(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, self.m, {e: c.conjugate() for e, c in self.terms.items()})

    def with_conductor(self, m: int) -> "Polynomial":
        if m == self.m:
            return self
        return Polynomial._raw(self.nvars, m, {e: c.embed(m) for e, c in self.terms.items()})

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.m == other.m and self.terms == other.terms
        if isinstance(other, (int, Fraction, CycNumber)):
            return self == Polynomial.constant(self.nvars, self.m, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, self.m, frozenset(self.terms.items())))

    # -- encoding ---------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "m": self.m,
            "terms": [{"exp": list(e), "coeff": c.to_json()} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        nvars, m = int(data["nvars"]), int(data["m"])
        return cls(nvars, m, {tuple(t["exp"]): CycNumber.from_json(m, t["coeff"]) for t in data["terms"]})

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self:
            mono = " ".join(
                f"x{k + 1}" if a == 1 else f"x{k + 1}^{a}" for k, a in enumerate(e) if a
            )
            coeff = str(c)
            if not mono:
                pieces.append(coeff)
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{coeff} * {mono}")
        out = " + ".join(pieces)
        return out.replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial(N={self.nvars}, m={self.m}, {self.to_text()})"


# ---------------------------------------------------------------------------
# parity types and the y = x^m substitution


def parity_type(exp: Composition, m: int) -> tuple[int, ...]:
    return tuple(e % m for e in exp)


def is_standard_parity(alpha: Iterable[int]) -> bool:
    return is_partition(alpha)


def parity_split(p: Polynomial, m: int) -> list[tuple[tuple[int, ...], Polynomial]]:
    """Group the terms of p by residues of their exponents mod m."""
    parts: dict[tuple, dict] = defaultdict(dict)
    for e, c in p.terms.items():
        parts[parity_type(e, m)][e] = c
    return [(k, Polynomial._raw(p.nvars, p.m, v)) for k, v in sorted(parts.items())]


def y_view(g: Polynomial, m: int) -> Polynomial:
    """Substitute y_i = x_i^m; the result has conductor m."""
    terms = {tuple(m * a for a in e): c.embed(m) for e, c in g.terms.items()}
    return Polynomial._raw(g.nvars, m, terms)


def x_to_y(p: Polynomial, m: int) -> Polynomial:
    """Inverse of :func:`y_view`; coefficients keep their conductor."""
    terms = {}
    for e, c in p.terms.items():
        if any(a % m for a in e):
            raise ValueError(f"exponent {e} is not divisible by m={m}")
        terms[tuple(a // m for a in e)] = c
    return Polynomial._raw(p.nvars, p.m, terms)


# ---------------------------------------------------------------------------
# text grammar:  expr := term (('+'|'-') term)* ;  term := factor ('*'? factor)* ;
# factor := atom ('^' int)? ;  atom := number | 'x'int | 'eta' | '(' expr ')'


class PolynomialParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    def __init__(self, text: str, nvars: int, m: int):
        self.text, self.pos, self.nvars, self.m = text, 0, nvars, m

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Polynomial:
        out = self.expr()
        if self._peek():
            raise PolynomialParseError(f"unexpected {self._peek()!r}", self.pos)
        return out

    def expr(self) -> Polynomial:
        sign = 1
        if self._peek() in "+-" and self._peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        out = self.term().scale(sign)
        while self._peek() in ("+", "-") and self._peek():
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self) -> Polynomial:
        out = self.factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                out = out * self.factor()
            elif ch and (ch.isalnum() or ch == "("):
                out = out * self.factor()
            else:
                return out

    def factor(self) -> Polynomial:
        base = self.atom()
        if self._peek() == "^":
            self.pos += 1
            self._skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise PolynomialParseError("expected exponent", start)
            base = base ** int(self.text[start:self.pos])
        return base

    def atom(self) -> Polynomial:
        ch = self._peek()
        start = self.pos
        if not ch:
            raise PolynomialParseError("unexpected end of input", self.pos)
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self._peek() != ")":
                raise PolynomialParseError("expected ')'", self.pos)
            self.pos += 1
            return inner
        if ch.isdigit():
            while self.pos < len(self.text) and (self.text[self.pos].isdigit() or self.text[self.pos] == "/"):
                self.pos += 1
            try:
                q = parse_rational(self.text[start:self.pos])
            except ValueError:
                raise PolynomialParseError("bad number", start) from None
            return Polynomial.constant(self.nvars, self.m, q)
        if self.text.startswith("eta", self.pos):
            self.pos += 3
            return Polynomial.constant(self.nvars, self.m, CycNumber.root_of_unity_power(self.m, 1))
        if ch in "xy":
            self.pos += 1
            s = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if s == self.pos:
                raise PolynomialParseError("expected variable index", s)
            i = int(self.text[s:self.pos])
            if not 1 <= i <= self.nvars:
                raise PolynomialParseError(f"variable index {i} out of range 1..{self.nvars}", s)
            v = Polynomial.variable(i, self.nvars, self.m)
            return v ** self.m if ch == "y" else v
        raise PolynomialParseError(f"unexpected {ch!r}", start)


def parse_polynomial(text: str, nvars: int, m: int = 1) -> Polynomial:
    """Parse the text form, e.g. ``"3/2 * x1^2 x2 - eta*x2"``.  ``yi`` means ``xi^m``."""
    return _Parser(text, nvars, m).parse()


def format_coefficient(c) -> str:
    return str(c) if isinstance(c, CycNumber) else format_rational(c)
