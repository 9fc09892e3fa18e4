import random
from fractions import Fraction

import pytest

from dunkl_gmpn.dunkl import OperatorContext, apply_T, pairing
from dunkl_gmpn.exactnum import CycNumber, make_params
from dunkl_gmpn.jack import vandermonde, x_alpha_g
from dunkl_gmpn.polyring import Polynomial, compositions
from dunkl_gmpn.sampling import (
    elementary_y,
    random_invariant,
    random_kappa,
    random_symmetric_y,
    random_y_polynomial,
)
from dunkl_gmpn.singular import (
    LITERAL_K0,
    TYPE_A_K0,
    HypothesisError,
    gram_corank_oracle,
    in_K0,
    in_K1,
    parameters_plus_one,
    radical_basis,
    singular_report,
    verify_shift,
)

F = Fraction


def ctx_of(m, p, N, *free):
    return OperatorContext.build(m, p, N, [F(v) for v in free])


def test_K1_examples():
    for N in (1, 2, 3):
        member, w = in_K1(make_params(2, 1, [F(3, 7), F(-1, 2)]), N)
        assert member and (w.n, w.i, w.value) == (0, 1, 0)
        assert in_K1(make_params(2, 1, [0, 0]), N) == (False, None)
    member, _ = in_K1(make_params(3, 1, [F(-1, 3), F(-2, 3), F(1, 5)]), 2)
    assert not member
    member, w = in_K1(make_params(3, 1, [F(-1, 3), F(-2, 3), F(-2, 3)]), 2)
    assert member and (w.n, w.i) == (0, 2)


def test_K1_witness_values_exact():
    kappa = make_params(3, 1, [F(1, 2), F(-7, 3), F(1, 3)])
    member, w = in_K1(kappa, 3)
    assert member
    assert w.n * kappa[0] + F(w.i, 3) + kappa[w.i] == w.value
    assert w.value <= 0 and w.value.denominator == 1


def test_K0_examples():
    assert in_K0(make_params(1, 1, [0]), 3) == (False, None)
    assert in_K0(make_params(1, 1, [1]), 3) == (False, None)
    member, wit = in_K0(make_params(1, 1, [F(-4, 3)]), 3)
    assert member and wit == (4, 3, 0)
    # the literal table has no entry for kappa_0 = -1/2; the type-A table does
    assert in_K0(make_params(1, 1, [F(-1, 2)]), 2, table=LITERAL_K0) == (False, None)
    assert in_K0(make_params(1, 1, [F(-1, 2)]), 2, table=TYPE_A_K0) == (True, (1, 2, 0))


def test_K0_oracle_confirmation():
    rep = singular_report(ctx_of(1, 1, 3, F(-4, 3)), 4)
    assert rep.in_K0 and rep.confirmed
    assert rep.oracle_corank_by_degree[3] == (4, 2)
    # literal table misses this singular value; the oracle still sees it
    rep = singular_report(ctx_of(2, 1, 2, F(-1, 2), F(1, 3)), 2)
    assert not rep.in_K0 and rep.oracle_singular and not rep.confirmed
    rep = singular_report(ctx_of(2, 1, 2, F(-1, 2), F(1, 3)), 2, table=TYPE_A_K0)
    assert rep.confirmed


def test_report_json_schema():
    rep = singular_report(ctx_of(2, 1, 1, 0, F(-1, 2)), 2)
    data = rep.to_json()
    assert data["kappa"] == ["0", "-1/2"]
    assert data["K0"] is False
    assert data["K1"] == {"member": True, "witness": [0, 1]}
    assert data["oracle"] == [{"degree": 1, "corank": 1}, {"degree": 2, "corank": 1}]


def test_oracle_examples():
    assert all(c == 0 for _, c in gram_corank_oracle(ctx_of(3, 1, 2, 0, 0, 0), 4))
    assert gram_corank_oracle(ctx_of(2, 1, 1, 0, F(-1, 2)), 1) == [(1, 1)]
    rng = random.Random(2)
    ctx = OperatorContext(2, 1, 2, random_kappa(2, 1, 2, rng))
    assert all(c == 0 for _, c in gram_corank_oracle(ctx, 4))


def test_radical_examples():
    rng = random.Random(3)
    assert radical_basis(OperatorContext(2, 1, 2, random_kappa(2, 1, 2, rng)), 3) == []
    assert radical_basis(ctx_of(2, 1, 1, 0, F(-1, 2)), 1) == [Polynomial.monomial((1,), 2)]
    assert radical_basis(ctx_of(2, 1, 1, 0, F(-1, 2)), 0) == []


@pytest.mark.parametrize("N", [1, 2])
def test_K1_soundness_on_grid(N):
    grid = [F(-3, 2), F(-1, 2), F(0), F(1, 2), F(3, 2)]
    seen = 0
    for k0 in grid:
        for k1 in grid:
            kappa = make_params(2, 1, [k0, k1])
            member, w = in_K1(kappa, N)
            if not member:
                continue
            deg = w.predicted_degree(N, 2)
            if deg == 0 or deg > 4:
                continue
            seen += 1
            ctx = OperatorContext(2, 1, N, kappa)
            assert dict(gram_corank_oracle(ctx, deg))[deg] >= 1, (k0, k1, deg)
    assert seen > 0


def test_radical_is_ideal():
    ctx = ctx_of(2, 1, 2, F(1, 3), F(-1, 2))
    for q in radical_basis(ctx, 2):
        for i in (1, 2):
            assert not apply_T(ctx, i, q)
        for j in (1, 2):
            xq = q * ctx.x(j)
            for b in compositions(3, 2):
                assert not pairing(ctx, Polynomial.monomial(b, 2), xq)


class TestShifts:
    def test_cyclic_full_trivial_g(self):
        ctx = OperatorContext(3, 1, 2, random_kappa(3, 1, 2, random.Random(1)))
        rep = verify_shift("cyclic-full", ctx, [(1, Polynomial.constant(2, 3, 1))])
        assert rep.passed and rep.cases == 2

    def test_symmetric_example(self):
        ctx = OperatorContext(2, 1, 2, random_kappa(2, 1, 2, random.Random(2)))
        rep = verify_shift("symmetric", ctx, [(elementary_y(1, 2, 2), Polynomial.constant(2, 2, 1))])
        assert rep.passed and rep.cases == 1

    def test_corollary_tautology(self):
        ctx = OperatorContext(2, 1, 2, random_kappa(2, 1, 2, random.Random(3)))
        one = Polynomial.constant(2, 2, 1)
        assert verify_shift("corollary", ctx, [(one, one)]).passed

    def test_hypothesis_errors(self):
        ctx = OperatorContext(2, 1, 2, random_kappa(2, 1, 2, random.Random(4)))
        x1 = ctx.x(1)
        with pytest.raises(HypothesisError):
            verify_shift("cyclic-full", ctx, [(1, x1)])
        with pytest.raises(HypothesisError):
            verify_shift("cyclic-full", ctx, [(2, ctx.one())])
        with pytest.raises(HypothesisError):
            verify_shift("symmetric", ctx, [(Polynomial.monomial((2, 0), 2), ctx.one())])
        with pytest.raises(HypothesisError):
            verify_shift("corollary", ctx, [(x1, ctx.one())])
        with pytest.raises(ValueError):
            verify_shift("bogus", ctx, [])

    @pytest.mark.parametrize("m, p, N", [(2, 1, 2), (3, 1, 2), (4, 2, 2), (2, 2, 2), (3, 1, 1)])
    def test_all_kinds_random(self, m, p, N):
        rng = random.Random(m * 100 + p * 10 + N)
        q = m // p
        for _ in range(2):
            ctx = OperatorContext(m, p, N, random_kappa(m, p, N, rng))
            cases = {
                "cyclic-full": [(t, random_y_polynomial(N, d, m, rng)) for t in range(1, m) for d in range(3)],
                "cyclic-p": [(t, s, random_y_polynomial(N, d, m, rng)) for t in range(1, q) for s in range(p) for d in range(2)],
                "symmetric": [(random_symmetric_y(N, a, m, rng), random_symmetric_y(N, b, m, rng)) for a in range(2) for b in range(2)],
                "corollary": [
                    (a, random_invariant(m, p, N, d, rng))
                    for d in range(0, 3 * m + 1)
                    if (a := random_invariant(m, p, N, d, rng)) is not None
                ],
            }
            for kind, inputs in cases.items():
                rep = verify_shift(kind, ctx, inputs)
                assert rep.passed, rep.to_json()
                assert rep.cases == len(inputs) * (N if kind.startswith("cyclic") else 1)


def test_parameters_plus_one():
    k = make_params(4, 2, [F(1, 3), F(1, 5)])
    assert parameters_plus_one(k, 2).kappa == (F(4, 3), F(1, 5) + F(1, 2), 0, F(1, 5) + F(1, 2))
    assert parameters_plus_one(k, 1).kappa[0] == F(1, 3)


def test_corollary_pi_norm_matches_hanlon():
    # with p = 1 the distinguished polynomial is x^{(m-1) v} prod (x_i^m - x_j^m)
    from dunkl_gmpn.jack import hanlon_norm

    ctx = OperatorContext(3, 1, 2, random_kappa(3, 1, 2, random.Random(5)))
    val, f = hanlon_norm(ctx, 2)
    assert f == x_alpha_g((2, 2), vandermonde(2), 3)
    assert pairing(ctx, f, f) == CycNumber.from_rational(3, val)
