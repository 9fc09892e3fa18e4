import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl_gmpn import linalg
from dunkl_gmpn.exactnum import CycNumber
from dunkl_gmpn.group import generators
from dunkl_gmpn.sampling import (
    k1_hit,
    negative_small_denominator,
    random_invariant,
    random_kappa,
    random_symmetric_y,
)
from dunkl_gmpn.singular import in_K1

entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def matrices(n, k):
    return st.lists(st.lists(entries, min_size=k, max_size=k), min_size=n, max_size=n)


@settings(max_examples=60)
@given(matrices(4, 5))
def test_rank_nullity(rows):
    null = linalg.nullspace(rows, 5)
    assert linalg.rank(rows) + len(null) == 5
    for v in null:
        assert all(x == 0 for x in linalg.mat_vec(rows, v))
    assert linalg.corank_rational([r[:4] for r in rows]) == 4 - linalg.rank([r[:4] for r in rows])


@settings(max_examples=40)
@given(matrices(3, 3), st.lists(entries, min_size=3, max_size=3))
def test_solve(rows, x):
    b = linalg.mat_vec(rows, x)
    if linalg.rank(rows) == 3:
        assert linalg.solve(rows, b) == x
    else:
        with pytest.raises(linalg.SingularMatrixError):
            linalg.solve(rows, b)


def test_cyclotomic_entries():
    eta = CycNumber.root_of_unity_power(3, 1)
    one = CycNumber.one(3)
    rows = [[one, eta], [eta, eta * eta]]
    assert linalg.corank(rows) == 1
    assert linalg.solve([[one, eta], [CycNumber.zero(3), one]], [eta, one]) == [CycNumber.zero(3), one]
    assert linalg.conjugate_transpose(rows) == [[one, eta.conjugate()], [eta.conjugate(), (eta * eta).conjugate()]]


def test_random_kappa_avoids_bad_sets():
    rng = random.Random(0)
    for m, p, N in [(2, 1, 2), (3, 1, 3), (4, 2, 2), (2, 2, 2)]:
        for _ in range(30):
            k = random_kappa(m, p, N, rng)
            assert not in_K1(k, N)[0] and not k1_hit(k, N)
            assert not negative_small_denominator(k[0], N)
            assert all(abs(v.numerator) <= 40 and v.denominator <= 40 for v in k.free)


def test_random_kappa_deterministic():
    a = [random_kappa(3, 1, 2, random.Random(5)) for _ in range(2)]
    assert a[0] == a[1]


@pytest.mark.parametrize("m, p, N", [(2, 1, 2), (4, 2, 2), (3, 3, 2)])
def test_random_invariants_are_invariant(m, p, N):
    rng = random.Random(1)
    found = 0
    for d in range(0, 3 * m + 1):
        f = random_invariant(m, p, N, d, rng)
        if f is None:
            continue
        found += 1
        assert all(g.act(f) == f for g in generators(m, p, N))
    assert found >= 2


def test_random_symmetric():
    f = random_symmetric_y(3, 2, 2, random.Random(2))
    from dunkl_gmpn.dunkl import transpose_poly

    assert transpose_poly(f, 1, 2) == f and transpose_poly(f, 2, 3) == f
    assert all(sum(e) == 4 for e in f.terms)


def test_negative_small_denominator():
    assert negative_small_denominator(Fraction(-1, 2), 2)
    assert not negative_small_denominator(Fraction(-1, 3), 2)
    assert not negative_small_denominator(Fraction(1, 2), 2)
