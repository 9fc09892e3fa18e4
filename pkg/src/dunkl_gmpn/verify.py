"""Verification suites: each checks a family of exact identities and reports
structured pass/fail results with re-runnable counterexamples.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from . import linalg
from .derham import (
    DifferentialForm,
    InvariantViolation,
    SingularParameterError,
    build_intertwiner,
    check_intertwining,
    d_k,
    euler_diagonal,
    euler_form,
    form_basis,
    koszul,
    z_spectrum,
)
from .dunkl import OperatorContext, apply_T, apply_U, gram_matrix, pairing
from .exactnum import CycNumber, format_rational, make_params
from .jack import PoleError, eigenfunction_for_type, hanlon_norm, is_standard, norm_closed_form
from .polyring import Polynomial, compositions, compositions_upto
from .sampling import (
    random_invariant,
    random_kappa,
    random_polynomial,
    random_symmetric_y,
    random_y_polynomial,
)
from .singular import gram_corank_oracle, in_K1, radical_basis, verify_shift

SUITES = ("commute", "hermitian", "norms", "derham", "shifts", "singular")


@dataclass(frozen=True)
class RunConfig:
    m: int = 1
    p: int = 1
    N: int = 1
    kappa: tuple | None = None  # kappa_0 then the free kappa_i
    seed: int = 0
    degree: int | None = None
    samples: int = 3

    def __post_init__(self):
        if self.m < 1 or self.p < 1 or self.m % self.p:
            raise ValueError(f"p={self.p} must divide m={self.m}")
        if self.N < 1:
            raise ValueError("N must be at least 1")
        if self.kappa is not None and len(self.kappa) != self.m // self.p:
            raise ValueError(f"G({self.m},{self.p},N) takes {self.m // self.p} parameters, got {len(self.kappa)}")

    def contexts(self, nonnegative: bool = False) -> list[OperatorContext]:
        if self.kappa is not None:
            return [OperatorContext(self.m, self.p, self.N, make_params(self.m, self.p, self.kappa))]
        rng = random.Random(self.seed)
        return [
            OperatorContext(self.m, self.p, self.N, random_kappa(self.m, self.p, self.N, rng, nonnegative=nonnegative))
            for _ in range(self.samples)
        ]


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    items: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, payload: dict | Callable[[], dict]):
        self.checks += 1
        if not ok:
            self.failures.append(payload() if callable(payload) else payload)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "items": self.items,
            "notes": self.notes,
        }


def _kappa_json(ctx: OperatorContext) -> list[str]:
    return [format_rational(k) for k in ctx.kappa.free]


def _rerun(cfg: RunConfig, suite: str, ctx: OperatorContext) -> str:
    return (
        f"verify --suite {suite} --m {cfg.m} --p {cfg.p} --N {cfg.N} "
        f"--kappa {','.join(_kappa_json(ctx))} --degree {cfg.degree if cfg.degree is not None else ''}".rstrip()
    )


# ---------------------------------------------------------------------------


def suite_commute(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("commute")
    D = cfg.degree if cfg.degree is not None else 5
    for ctx in cfg.contexts():
        for alpha in compositions_upto(D, cfg.N):
            x = Polynomial.monomial(alpha, cfg.m)
            Ti = {i: apply_T(ctx, i, x) for i in range(1, cfg.N + 1)}
            for i in range(1, cfg.N + 1):
                for j in range(i + 1, cfg.N + 1):
                    ok = apply_T(ctx, i, Ti[j]) == apply_T(ctx, j, Ti[i])
                    res.check(ok, lambda: {"kappa": _kappa_json(ctx), "i": i, "j": j, "alpha": list(alpha),
                                           "rerun": _rerun(cfg, "commute", ctx)})
            if sum(alpha) <= max(D - 1, 0):
                Ui = {i: apply_U(ctx, i, x) for i in range(1, cfg.N + 1)}
                for i in range(1, cfg.N + 1):
                    for j in range(i + 1, cfg.N + 1):
                        ok = apply_U(ctx, i, Ui[j]) == apply_U(ctx, j, Ui[i])
                        res.check(ok, lambda: {"kappa": _kappa_json(ctx), "U": [i, j], "alpha": list(alpha)})
        res.items.append({"kappa": _kappa_json(ctx), "max_degree": D})
    return res


def _random_complex_poly(N: int, degree: int, m: int, rng: random.Random) -> Polynomial:
    p = random_polynomial(N, degree, m, rng)
    if m > 2:
        p = p + random_polynomial(N, degree, m, rng).scale(CycNumber.root_of_unity_power(m, 1))
    return p


def suite_hermitian(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("hermitian")
    D = cfg.degree if cfg.degree is not None else 4
    rng = random.Random(cfg.seed + 1)
    for ctx in cfg.contexts():
        for n in range(0, D + 1):
            p = _random_complex_poly(cfg.N, n, cfg.m, rng)
            q = _random_complex_poly(cfg.N, n, cfg.m, rng)
            res.check(pairing(ctx, p, q) == pairing(ctx, q, p).conjugate(),
                      lambda: {"kappa": _kappa_json(ctx), "p": p.to_text(), "q": q.to_text(), "law": "hermitian"})
            for i in range(1, cfg.N + 1):
                Uq = apply_U(ctx, i, q)
                res.check(pairing(ctx, apply_U(ctx, i, p), q) == pairing(ctx, p, Uq),
                          lambda: {"kappa": _kappa_json(ctx), "p": p.to_text(), "q": q.to_text(), "U": i})
            if n >= 1:
                p1 = _random_complex_poly(cfg.N, n - 1, cfg.m, rng)
                for i in range(1, cfg.N + 1):
                    xi_p = p1 * Polynomial.variable(i, cfg.N, cfg.m)
                    res.check(pairing(ctx, xi_p, q) == pairing(ctx, p1, apply_T(ctx, i, q)),
                              lambda: {"kappa": _kappa_json(ctx), "p": p1.to_text(), "q": q.to_text(), "i": i,
                                       "law": "contravariance"})
            mat = gram_matrix(ctx, n)
            res.check(mat == linalg.conjugate_transpose(mat), {"kappa": _kappa_json(ctx), "degree": n, "law": "gram"})
        res.items.append({"kappa": _kappa_json(ctx), "max_degree": D})
    return res


def standard_types(m: int, N: int) -> list[tuple]:
    return [a for a in product(range(m), repeat=N) if is_standard(a)]


def suite_norms(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("norms")
    D = cfg.degree if cfg.degree is not None else 4
    m, N = cfg.m, cfg.N
    for ctx in cfg.contexts():
        for alpha in product(range(m), repeat=N):
            for gd in range(0, (D - sum(alpha)) // m + 1 if sum(alpha) <= D else 0):
                for gamma in compositions(gd, N):
                    try:
                        f, w, vals = eigenfunction_for_type(ctx, alpha, gamma)
                    except PoleError as exc:
                        res.notes.append(str(exc))
                        continue
                    for i in range(N):
                        res.check(apply_U(ctx, w[i] + 1, f) == f.scale(vals[i]),
                                  lambda: {"kappa": _kappa_json(ctx), "alpha": list(alpha), "gamma": list(gamma),
                                           "U": w[i] + 1, "eigenvalue": format_rational(vals[i])})
                    if is_standard(alpha):
                        lhs = pairing(ctx, f, f)
                        rhs = norm_closed_form(ctx, alpha, gamma)
                        res.check(lhs == rhs, lambda: {"kappa": _kappa_json(ctx), "alpha": list(alpha),
                                                       "gamma": list(gamma), "pairing": str(lhs),
                                                       "closed_form": format_rational(rhs)})
                        res.items.append({"kappa": _kappa_json(ctx), "alpha": list(alpha), "gamma": list(gamma),
                                          "norm": format_rational(rhs)})
        if N <= 3:
            for t in range(m):
                val, f = hanlon_norm(ctx, t)
                res.check(pairing(ctx, f, f) == val, {"kappa": _kappa_json(ctx), "hanlon_t": t})
    return res


def suite_derham(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("derham")
    D = cfg.degree if cfg.degree is not None else 4
    N, m = cfg.N, cfg.m
    zero = DifferentialForm.zero(N, m)
    for ctx in cfg.contexts():
        for l in range(0, min(2, N) + 1):
            for n in range(0, D + 1):
                for key in form_basis(N, l, n):
                    w = DifferentialForm(N, m, {key: 1})
                    if l <= 1:
                        res.check(d_k(ctx, d_k(ctx, w)) == zero, {"kappa": _kappa_json(ctx), "form": str(w), "law": "d^2"})
                    if l >= 1 and n <= 3:
                        res.check(koszul(koszul(w)) == zero, {"form": str(w), "law": "koszul^2"})
                    if l <= 1 and n <= 3:
                        ok = euler_form(ctx, w) == euler_diagonal(ctx, w)
                        res.check(ok, lambda: {"kappa": _kappa_json(ctx), "form": str(w), "law": "pd+dp=E"})
        try:
            table = build_intertwiner(ctx, D)
            bad = check_intertwining(table)
            res.check(not bad, {"kappa": _kappa_json(ctx), "intertwining_failures": [[i, list(b)] for i, b in bad]})
        except SingularParameterError as exc:
            res.check(False, {"kappa": _kappa_json(ctx), "error": str(exc)})
        res.items.append({"kappa": _kappa_json(ctx), "max_degree": D})
    zero_ctx = OperatorContext(m, cfg.p, N, make_params(m, cfg.p, [0] * (m // cfg.p)))
    res.check(build_intertwiner(zero_ctx, D).is_identity(), {"law": "V(0) = identity"})
    for n in range(0, D + 1):
        try:
            spectrum = z_spectrum(zero_ctx, n)
            res.items.append({"degree": n, "z_spectrum": [[list(c), k] for c, k in spectrum]})
            res.check(all(v >= 0 for c, _ in spectrum for v in c), {"degree": n, "law": "z integrality"})
        except InvariantViolation as exc:
            res.check(False, {"degree": n, "error": str(exc)})
    return res


def suite_shifts(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("shifts")
    m, p, N = cfg.m, cfg.p, cfg.N
    q = m // p
    D = cfg.degree if cfg.degree is not None else 3 * m
    rng = random.Random(cfg.seed + 2)
    for ctx in cfg.contexts():
        cases = {
            "cyclic-full": [(t, random_y_polynomial(N, d, m, rng)) for t in range(1, m) for d in range(0, D // m + 1)],
            "cyclic-p": [(t, s, random_y_polynomial(N, d, m, rng))
                         for t in range(1, q) for s in range(p) for d in range(0, D // m + 1)],
            "symmetric": [(random_symmetric_y(N, a, m, rng), random_symmetric_y(N, b, m, rng))
                          for a in range(0, D // m + 1) for b in range(0, D // m + 1)],
        }
        inv = []
        for d in range(0, D + 1):
            a = random_invariant(m, p, N, d, rng)
            if a is not None:
                inv.append((a, random_invariant(m, p, N, d, rng)))
        cases["corollary"] = inv
        for kind, inputs in cases.items():
            rep = verify_shift(kind, ctx, inputs)
            res.checks += rep.cases
            for f in rep.failures:
                res.failures.append({"kind": kind, "kappa": _kappa_json(ctx), **f})
            res.items.append({"kind": kind, "kappa": _kappa_json(ctx), "cases": rep.cases})
            if rep.cases == 0:
                res.notes.append(f"{kind}: no admissible inputs for G({m},{p},{N})")
    return res


def suite_singular(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("singular")
    D = cfg.degree if cfg.degree is not None else 4
    m, p, N = cfg.m, cfg.p, cfg.N
    for ctx in cfg.contexts():
        cor = gram_corank_oracle(ctx, D)
        res.check(not any(c for _, c in cor), {"kappa": _kappa_json(ctx), "coranks": cor, "law": "generic regular"})
        res.items.append({"kappa": _kappa_json(ctx), "coranks": [[n, c] for n, c in cor]})
    q = m // p
    if q > 1:
        k0 = cfg.contexts()[0].kappa0
        free = [k0, Fraction(-1, m)] + [Fraction(0)] * (q - 2)
        ctx = OperatorContext(m, p, N, make_params(m, p, free))
        member, wit = in_K1(ctx.kappa, N)
        deg = wit.predicted_degree(N, m)
        res.check(member, {"kappa": _kappa_json(ctx), "law": "K1 membership"})
        cor = dict(gram_corank_oracle(ctx, deg))
        res.check(cor[deg] >= 1, {"kappa": _kappa_json(ctx), "degree": deg, "law": "K1 soundness"})
        res.items.append({"kappa": _kappa_json(ctx), "witness": [wit.n, wit.i], "degree": deg, "corank": cor[deg]})
        # joint kernel of the T_i lies in the radical, with equality when lower degrees are regular
        rad = radical_basis(ctx, deg)
        lower_regular = not any(cor[n] for n in range(1, deg))
        ok = len(rad) == cor[deg] if lower_regular else len(rad) <= cor[deg]
        res.check(ok, {"kappa": _kappa_json(ctx), "degree": deg, "law": "radical dimension"})
        for qpoly in rad:
            for b in compositions(deg, N):
                res.check(not pairing(ctx, Polynomial.monomial(b, m), qpoly),
                          {"radical_element": qpoly.to_text(), "against": list(b)})
            # the radical is an ideal
            for j in range(1, N + 1):
                xq = qpoly * Polynomial.variable(j, N, m)
                for b in compositions(deg + 1, N):
                    res.check(not pairing(ctx, Polynomial.monomial(b, m), xq),
                              {"radical_element": qpoly.to_text(), "x": j, "against": list(b)})
    else:
        res.notes.append("no free cyclic parameter: K_1 witness check skipped")
    return res


SUITE_FUNCS = {
    "commute": suite_commute,
    "hermitian": suite_hermitian,
    "norms": suite_norms,
    "derham": suite_derham,
    "shifts": suite_shifts,
    "singular": suite_singular,
}


def run_suites(cfg: RunConfig, suite: str) -> list[SuiteResult]:
    names = SUITES if suite == "all" else (suite,)
    for n in names:
        if n not in SUITE_FUNCS:
            raise ValueError(f"unknown suite {n!r}")
    return [SUITE_FUNCS[n](cfg) for n in names]
