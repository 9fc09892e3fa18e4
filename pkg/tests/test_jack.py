import random
from fractions import Fraction
from itertools import product
from math import factorial

import pytest

from dunkl_gmpn.dunkl import OperatorContext, apply_D, apply_U, apply_UA, pairing
from dunkl_gmpn.exactnum import CycNumber
from dunkl_gmpn.jack import (
    JackContext,
    PoleError,
    a_delta,
    chi,
    delta,
    e_factor,
    eigenfunction,
    eigenfunction_for_type,
    hanlon_norm,
    hook,
    is_standard,
    norm_closed_form,
    p_basis,
    partition_of,
    pochhammer,
    vandermonde,
    x_alpha_g,
    xi,
    xi_vector,
    zeta,
    zeta_coefficients,
)
from dunkl_gmpn.polyring import Polynomial, compositions, compositions_upto
from dunkl_gmpn.sampling import random_kappa

F = Fraction


def y(i, N):
    return Polynomial.variable(i, N)


def kappa0_samples(N, seed=0, count=3):
    rng = random.Random(seed)
    return [random_kappa(1, 1, N, rng)[0] for _ in range(count)]


def test_xi_examples():
    k0 = F(2, 5)
    for N in (1, 2, 3):
        for i in range(1, N + 1):
            assert xi(N, k0, (0,) * N, i) == (N - i + 1) * k0 + 1
    assert xi_vector(2, k0, (1, 0)) == (2 * k0 + 2, k0 + 1)
    assert xi_vector(2, k0, (0, 1)) == (k0 + 1, 2 * k0 + 2)


def test_p_basis_examples():
    k0 = F(3, 11)
    for N in (2, 3):
        ctx = JackContext(N, k0)
        assert p_basis(ctx, (0,) * N) == Polynomial.constant(N, 1, 1)
        total = sum((y(j, N) for j in range(1, N + 1)), Polynomial.zero(N))
        for i in range(1, N + 1):
            e = tuple(int(k == i - 1) for k in range(N))
            assert p_basis(ctx, e) == y(i, N) + total.scale(k0)


@pytest.mark.parametrize("N", [2, 3])
def test_p_basis_kernel_property(N):
    k0 = F(-2, 7)
    ctx = JackContext(N, k0)
    for mu in compositions_upto(3, N):
        p = p_basis(ctx, mu)
        for i in range(1, N + 1):
            if mu[i - 1] == 0:
                assert not apply_D(k0, i, p)


def test_zeta_examples():
    k0 = F(1, 3)
    ctx = JackContext(2, k0)
    assert zeta(ctx, (0, 0)) == Polynomial.constant(2, 1, 1)
    assert zeta(ctx, (1, 0)) == p_basis(ctx, (1, 0))
    z = zeta(ctx, (0, 1))
    coeffs = zeta_coefficients(ctx, (0, 1))
    assert coeffs[(0, 1)] == 1 and set(coeffs) <= {(0, 1), (1, 0)}
    for i in (1, 2):
        assert apply_UA(k0, i, z) == z.scale(xi(2, k0, (0, 1), i))


@pytest.mark.parametrize("N", [1, 2, 3])
def test_zeta_eigen_equations(N):
    for k0 in kappa0_samples(N, seed=N):
        ctx = JackContext(N, k0)
        for mu in compositions_upto(4, N):
            z = zeta(ctx, mu)
            assert all(sum(e) == sum(mu) for e in z.terms)
            for i in range(1, N + 1):
                assert apply_UA(k0, i, z) == z.scale(xi(N, k0, mu, i))


@pytest.mark.parametrize("N", [2, 3])
def test_eigenvalue_separation(N):
    for k0 in kappa0_samples(N, seed=7):
        for n in range(5):
            vecs = [xi_vector(N, k0, mu) for mu in compositions(n, N)]
            assert len(set(vecs)) == len(vecs)


def test_pole_screen():
    with pytest.raises(PoleError):
        zeta(JackContext(2, F(-1, 2)), (0, 2))
    with pytest.raises(PoleError):
        zeta(JackContext(3, F(-2, 3)), (1, 0, 0))


def test_combinatorial_examples():
    k0, t = F(2, 7), F(5, 3)
    assert e_factor(3, k0, (2, 1, 0), 1) == 1
    for s in (1, -1):
        assert e_factor(2, k0, (0, 1), s) == 1 + s * k0 / (k0 + 1)
        xs = xi_vector(3, k0, (0, 0, 1))
        expect = (1 + s * k0 / (xs[2] - xs[0])) * (1 + s * k0 / (xs[2] - xs[1]))
        assert e_factor(3, k0, (0, 0, 1), s) == expect
    assert pochhammer(3, k0, t, ()) == 1
    assert pochhammer(3, k0, t, (1,)) == t
    assert pochhammer(3, k0, t, (2, 1)) == t * (t + 1) * (t - k0)
    assert hook((), t, k0) == 1
    assert hook((1,), t, k0) == t
    assert hook((2,), t, k0) == t * (t + 1)
    with pytest.raises(ValueError):
        pochhammer(2, k0, t, (1, 2))
    with pytest.raises(ValueError):
        hook((0, 1), t, k0)


def test_chi_examples():
    assert chi(1, (1, 0)) == (1, 0)
    assert chi(2, (3, 1)) == (1, 0)
    assert chi(3, (0, 0, 0)) == (0, 0, 0)


def ctx_full(m, N, seed):
    return OperatorContext(m, 1, N, random_kappa(m, 1, N, random.Random(seed)))


def test_norm_examples():
    ctx = ctx_full(3, 2, 1)
    k0, k1 = ctx.kappa[0], ctx.kappa[1]
    assert norm_closed_form(ctx, (0, 0), (0, 0)) == 1
    assert norm_closed_form(ctx, (1, 0), (0, 0)) == 1 + 3 * k1 + 3 * k0
    c2 = ctx_full(2, 2, 2)
    k0, k1 = c2.kappa[0], c2.kappa[1]
    assert norm_closed_form(c2, (1, 1), (0, 0)) == 4 * (k0 + F(1, 2) + k1) * (F(1, 2) + k1)
    x12 = Polynomial.monomial((1, 1), 2)
    assert pairing(c2, x12, x12) == CycNumber.from_rational(2, norm_closed_form(c2, (1, 1), (0, 0)))
    with pytest.raises(ValueError):
        norm_closed_form(c2, (0, 1), (0, 0))


@pytest.mark.parametrize("m, N", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_norm_formula_against_pairing(m, N):
    ctx = ctx_full(m, N, m + N)
    for alpha in product(range(m), repeat=N):
        if not is_standard(alpha):
            continue
        for d in range(0, 2):
            for gamma in compositions(d, N):
                f, _ = eigenfunction(ctx, alpha, gamma)
                assert pairing(ctx, f, f) == CycNumber.from_rational(m, norm_closed_form(ctx, alpha, gamma))


def test_orthogonality():
    m, N = 2, 2
    ctx = ctx_full(m, N, 3)
    for alpha in [(0, 0), (1, 0), (1, 1)]:
        for d in range(3):
            gs = compositions(d, N)
            fs = [eigenfunction(ctx, alpha, g)[0] for g in gs]
            for i, j in product(range(len(gs)), repeat=2):
                if i != j:
                    assert not pairing(ctx, fs[i], fs[j])


def test_eigenfunction_examples():
    m, N = 3, 2
    ctx = ctx_full(m, N, 4)
    k0, k1 = ctx.kappa[0], ctx.kappa[1]
    f, vals = eigenfunction(ctx, (0, 0), (1, 0))
    assert vals[0] == m * (xi(N, k0, (1, 0), 1) - k0 + F(1, m) - 1 + k1)
    f, vals = eigenfunction(ctx, (m - 1, m - 1), (0, 0))
    assert vals == [m * (xi(N, k0, (0, 0), i) - k0) for i in (1, 2)]
    for i in (1, 2):
        assert apply_U(ctx, i, f) == f.scale(vals[i - 1])
    c2 = ctx_full(2, 2, 5)
    f, vals = eigenfunction(c2, (1, 0), (0, 0), w=(1, 0))
    assert f == Polynomial.monomial((0, 1), 2)
    assert apply_U(c2, 2, f) == f.scale(vals[0])
    with pytest.raises(ValueError):
        eigenfunction(c2, (1, 1), (0, 0), w=(1, 0))
    with pytest.raises(ValueError):
        eigenfunction(c2, (0, 1), (0, 0))


@pytest.mark.parametrize("m, N", [(2, 2), (3, 2), (2, 3)])
def test_nonstandard_eigenfunctions(m, N):
    ctx = ctx_full(m, N, 6)
    for beta in product(range(m), repeat=N):
        for gamma in compositions_upto(1, N):
            f, w, vals = eigenfunction_for_type(ctx, beta, gamma)
            for i in range(N):
                assert apply_U(ctx, w[i] + 1, f) == f.scale(vals[i])


def test_a_delta_is_vandermonde():
    for N in (1, 2, 3):
        for k0 in kappa0_samples(N, seed=N):
            a = a_delta(JackContext(N, k0))
            assert a == vandermonde(N)
    assert vandermonde(2) == y(1, 2) - y(2, 2)
    from dunkl_gmpn.dunkl import transpose_poly

    v = vandermonde(3)
    assert transpose_poly(v, 1, 3) == -v
    with pytest.raises(ValueError):
        a_delta(JackContext(2, F(1, 3)), (1, 1))


@pytest.mark.parametrize("N", [2, 3])
def test_symmetrization_norm(N):
    for k0 in kappa0_samples(N, seed=10 + N, count=2):
        ctx = OperatorContext(1, 1, N, random_kappa(1, 1, N, random.Random(0)).with_free([k0]))
        d = delta(N)
        z = zeta(JackContext(N, k0), d)
        lhs = pairing(ctx, vandermonde(N), vandermonde(N))
        e_minus = hook(d, 1, k0) / hook(d, k0 + 1, k0)
        assert e_minus == e_factor(N, k0, tuple(reversed(d)), -1)
        assert lhs == pairing(ctx, z, z).scale(factorial(N) * e_minus)


@pytest.mark.parametrize("N", [2, 3])
def test_norm_ratio_to_partition(N):
    k0 = kappa0_samples(N, seed=20)[0]
    ctx = OperatorContext.build(1, 1, N, [k0])
    jc = JackContext(N, k0)
    for gamma in compositions_upto(3, N):
        z, zp = zeta(jc, gamma), zeta(jc, partition_of(gamma))
        ratio = e_factor(N, k0, gamma, 1) * e_factor(N, k0, gamma, -1)
        assert pairing(ctx, z, z) == pairing(ctx, zp, zp).scale(ratio)


def test_hanlon_examples():
    val, f = hanlon_norm(OperatorContext.build(3, 1, 1, [F(1, 2), F(1, 3), F(1, 4)]), 0)
    assert val == 1 and f == Polynomial.constant(1, 3, 1)
    ctx = ctx_full(2, 2, 7)
    k0, k1 = ctx.kappa[0], ctx.kappa[1]
    val, f = hanlon_norm(ctx, 0)
    assert f == Polynomial(2, 2, {(2, 0): 1, (0, 2): -1})
    assert val == 2 * 4 * (k0 + F(1, 2) + k1) * (2 * k0 + 1)
    for t in range(2):
        val, f = hanlon_norm(ctx, t)
        assert pairing(ctx, f, f) == CycNumber.from_rational(2, val)
    with pytest.raises(ValueError):
        hanlon_norm(ctx, 2)


def test_hanlon_m3():
    ctx = ctx_full(3, 2, 8)
    for t in range(3):
        val, f = hanlon_norm(ctx, t)
        assert pairing(ctx, f, f) == CycNumber.from_rational(3, val)


def test_x_alpha_g():
    g = Polynomial.monomial((1, 0), 1)
    assert x_alpha_g((1, 2), g, 3) == Polynomial.monomial((4, 2), 3)
