"""Exact scalars: rationals and the cyclotomic field Q(eta), eta = exp(2 pi i / m).

Rationals are :class:`fractions.Fraction`.  Elements of Q(eta) are stored as
coordinate vectors in the power basis ``1, t, ..., t^(phi(m)-1)`` of
``Q[t] / Phi_m(t)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "CycNumber"]


class ConductorMismatch(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` into a reduced Fraction."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, lowest degree first)


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    rem = num[:dd] or [0]
    return quot, rem


def _poly_mul_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    num = [-1] + [0] * (m - 1) + [1]
    den = [1]
    for d in _divisors(m):
        if d < m:
            den = _poly_mul_int(den, cyclotomic_polynomial(d))
    quot, rem = _poly_divmod_int(num, den)
    assert not any(rem)
    while len(quot) > 1 and quot[-1] == 0:
        quot.pop()
    return tuple(quot)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@dataclass(frozen=True)
class _FieldData:
    m: int
    phi: int
    # powers[k] = coordinates of t^k reduced mod Phi_m, for 0 <= k < max(2 phi - 1, m)
    powers: tuple[tuple[Fraction, ...], ...]


@lru_cache(maxsize=None)
def _field(m: int) -> _FieldData:
    cyc = cyclotomic_polynomial(m)
    phi = len(cyc) - 1
    zero = Fraction(0)
    powers: list[tuple[Fraction, ...]] = []
    cur = [zero] * phi
    cur[0] = Fraction(1)
    for _ in range(max(2 * phi - 1, m, 1)):
        powers.append(tuple(cur))
        # multiply by t
        top = cur[-1]
        nxt = [zero] + cur[:-1]
        if top:
            for j in range(phi):
                nxt[j] -= top * cyc[j]
        cur = nxt
    return _FieldData(m, phi, tuple(powers))


class CycNumber:
    """An element of Q(eta_m); immutable."""

    __slots__ = ("m", "coords")

    def __init__(self, m: int, coords: Iterable):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != euler_phi(m):
            raise ValueError(f"expected {euler_phi(m)} coordinates for conductor {m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    @classmethod
    def _raw(cls, m: int, coords: tuple) -> "CycNumber":
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "coords", coords)
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_rational(cls, m: int, q) -> "CycNumber":
        phi = _field(m).phi
        return cls._raw(m, (Fraction(q),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zero(cls, m: int) -> "CycNumber":
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m: int) -> "CycNumber":
        return cls.from_rational(m, 1)

    @classmethod
    def root_of_unity_power(cls, m: int, s: int) -> "CycNumber":
        """eta^s."""
        return cls._raw(m, _field(m).powers[s % m])

    # -- predicates -------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __bool__(self) -> bool:
        return any(self.coords)

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            if other.m != self.m:
                raise ConductorMismatch(f"conductors differ: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.from_rational(self.m, other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber._raw(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self.m, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber._raw(self.m, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q) -> "CycNumber":
        """Multiply by a rational."""
        return CycNumber._raw(self.m, tuple(a * q for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coords, other.coords
        phi = len(a)
        if phi == 1:
            return CycNumber._raw(self.m, (a[0] * b[0],))
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        powers = _field(self.m).powers
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                red = powers[k]
                for j in range(phi):
                    if red[j]:
                        out[j] += c * red[j]
        return CycNumber._raw(self.m, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(eta)")
        phi = len(self.coords)
        if phi == 1:
            return CycNumber._raw(self.m, (1 / self.coords[0],))
        # columns of the multiplication-by-self matrix are self * t^j
        basis = [CycNumber._raw(self.m, _field(self.m).powers[j]) for j in range(phi)]
        cols = [(self * b).coords for b in basis]
        mat = [[cols[j][i] for j in range(phi)] + [Fraction(int(i == 0))] for i in range(phi)]
        return CycNumber._raw(self.m, _solve_square(mat))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNumber.one(self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "CycNumber":
        """Complex conjugation: the ring map t -> t^(m-1)."""
        if len(self.coords) == 1:
            return self
        powers = _field(self.m).powers
        out = [Fraction(0)] * len(self.coords)
        for k, c in enumerate(self.coords):
            if c:
                red = powers[(k * (self.m - 1)) % self.m]
                for j, r in enumerate(red):
                    if r:
                        out[j] += c * r
        return CycNumber._raw(self.m, tuple(out))

    def embed(self, new_m: int) -> "CycNumber":
        """Image under Q(eta_m) -> Q(eta_new_m), requires m | new_m."""
        if new_m == self.m:
            return self
        if new_m % self.m:
            raise ConductorMismatch(f"cannot embed conductor {self.m} into {new_m}")
        if self.is_rational():
            return CycNumber.from_rational(new_m, self.coords[0])
        step = new_m // self.m
        acc = CycNumber.zero(new_m)
        for k, c in enumerate(self.coords):
            if c:
                acc = acc + CycNumber.root_of_unity_power(new_m, k * step).scale(c)
        return acc

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNumber):
            return self.m == other.m and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.m, self.coords))

    # -- encoding ---------------------------------------------------------
    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coords]

    @classmethod
    def from_json(cls, m: int, data: Sequence[str]) -> "CycNumber":
        return cls(m, [parse_rational(str(c)) for c in data])

    def __str__(self) -> str:
        if self.is_rational():
            return format_rational(self.coords[0])
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if k == 0 else ("eta" if k == 1 else f"eta^{k}")
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def __repr__(self) -> str:
        return f"CycNumber(m={self.m}, {self})"


def _solve_square(aug: list[list[Fraction]]) -> tuple[Fraction, ...]:
    n = len(aug)
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[r][n] for r in range(n))


def as_cyc(m: int, value) -> CycNumber:
    if isinstance(value, CycNumber):
        if value.m != m:
            return value.embed(m)
        return value
    return CycNumber.from_rational(m, value)


# ---------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class ParamTuple:
    """kappa = (kappa_0, ..., kappa_{m-1}) for G(m, p, N)."""

    m: int
    p: int
    kappa: tuple[Fraction, ...]

    def __post_init__(self):
        if self.m < 1 or self.p < 1 or self.m % self.p:
            raise ValueError(f"p={self.p} must be a positive divisor of m={self.m}")
        if len(self.kappa) != self.m:
            raise ValueError("kappa must have exactly m entries")
        q = self.m // self.p
        if self.p > 1:
            for j in range(1, self.m):
                want = Fraction(0) if j % q == 0 else self.kappa[j % q]
                if self.kappa[j] != want:
                    raise ValueError(f"kappa violates the G({self.m},{self.p},N) periodicity at index {j}")

    def __getitem__(self, s: int) -> Fraction:
        return self.kappa[s]

    @property
    def free(self) -> tuple[Fraction, ...]:
        """kappa_0 followed by kappa_1 .. kappa_{m/p - 1}."""
        return self.kappa[: self.m // self.p]

    def with_free(self, free: Sequence) -> "ParamTuple":
        return make_params(self.m, self.p, free)

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(k) for k in self.kappa) + ")"


def make_params(m: int, p: int, free_values: Sequence) -> ParamTuple:
    """Expand kappa_0, kappa_1..kappa_{m/p-1} into the full periodic tuple."""
    if m < 1 or p < 1 or m % p:
        raise ValueError(f"p={p} does not divide m={m}")
    q = m // p
    free = [Fraction(v) for v in free_values]
    if len(free) != q:
        raise ValueError(f"G({m},{p},N) takes {q} free parameters (kappa_0..kappa_{q - 1}), got {len(free)}")
    kappa = [free[0]]
    for j in range(1, m):
        kappa.append(Fraction(0) if j % q == 0 else free[j % q])
    return ParamTuple(m, p, tuple(kappa))
