"""Exact dense linear algebra over Q and Q(eta).

Matrices are lists of rows.  Entries may be ``Fraction`` or ``CycNumber``;
the routines only use ring operations, division and truth testing.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .exactnum import CycNumber


class SingularMatrixError(ArithmeticError):
    """A linear system has no solution or no unique solution."""


def _copy(rows: Sequence[Sequence]) -> list[list]:
    return [list(r) for r in rows]


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = _copy(rows)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(rows: Sequence[Sequence]) -> int:
    if rows and all(isinstance(x, (int, Fraction)) for row in rows for x in row):
        return len(rows[0]) - corank_rational(rows) if rows[0] else 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None, zero=Fraction(0), one=Fraction(1)) -> list[list]:
    """Basis of {v : A v = 0}, one vector per free column (free entry = 1)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[one if j == k else zero for j in range(ncols)] for k in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            if red[r][f]:
                v[pc] = -red[r][f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list:
    """Unique solution of A x = b; raises SingularMatrixError otherwise."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        raise SingularMatrixError("inconsistent linear system")
    if len(pivots) < ncols:
        raise SingularMatrixError(f"solution not unique (rank {len(pivots)} < {ncols})")
    return [red[r][ncols] for r in range(ncols)]


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> list:
    out = []
    for row in rows:
        acc = None
        for a, b in zip(row, v):
            if a and b:
                acc = a * b if acc is None else acc + a * b
        out.append(acc if acc is not None else Fraction(0))
    return out


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> list[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def conjugate_transpose(rows: Sequence[Sequence]) -> list[list]:
    def conj(x):
        return x.conjugate() if isinstance(x, CycNumber) else x

    return [[conj(rows[i][j]) for i in range(len(rows))] for j in range(len(rows[0]))] if rows else []


# ---------------------------------------------------------------------------
# fraction-free elimination over Z


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        vals = [x.rational_value() if isinstance(x, CycNumber) else Fraction(x) for x in row]
        den = lcm(*(v.denominator for v in vals)) if vals else 1
        out.append([int(v * den) for v in vals])
    return out


def corank_rational(rows: Sequence[Sequence]) -> int:
    """ncols - rank for a rational matrix, by Bareiss elimination on integers."""
    if not rows:
        return 0
    a = _integer_rows(rows)
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            a[i] = [(p * x - f * y) // prev for x, y in zip(a[i], a[r])]
        prev = p
        r += 1
    return ncols - r


def corank(rows: Sequence[Sequence]) -> int:
    """ncols - rank; fraction-free when every entry is rational."""
    if not rows:
        return 0
    if all(not isinstance(x, CycNumber) or x.is_rational() for row in rows for x in row):
        return corank_rational(rows)
    return len(rows[0]) - len(rref(rows)[1])
