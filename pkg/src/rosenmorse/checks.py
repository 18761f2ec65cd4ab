"""Verification suites behind the command-line `verify` subcommand.

Each suite recomputes closed forms and measures them against an independent
route (exact substitution, quadrature, or the finite-difference eigensolver),
returning one record per check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import numerics, rodrigues, susy, trm
from .polycore import Polynomial

DEFAULT_PAIRS = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(50)), (Fraction(1, 4), Fraction(1)))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name, passed, detail):
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def _ode_residual(params: trm.TrmParams, n: int) -> Polynomial:
    level = trm.trm_level(params, n)
    c = trm.trm_polynomial(params, n)
    s = Polynomial((1, 0, 1))
    first = 2 * Polynomial((level.alpha / 2, level.beta))
    zeroth = -level.beta * (1 - level.beta) - params.a * (params.a + 1)
    return s * c.diff().diff() + first * c.diff() + zeroth * c


def suite_polynomials(pairs=DEFAULT_PAIRS, n_max: int = 8) -> list:
    out = []
    for a, b in pairs:
        params = trm.TrmParams(a, b)
        worst_deg = True
        all_zero = True
        for n in range(1, n_max + 1):
            res = _ode_residual(params, n)
            all_zero = all_zero and res.is_zero
            worst_deg = worst_deg and trm.trm_polynomial(params, n).degree == n - 1
        out.append(_result(
            f"ode-residual a={a} b={b} n<={n_max}",
            all_zero, "exact residual polynomial = 0" if all_zero else "nonzero residual",
        ))
        out.append(_result(
            f"degree a={a} b={b}", worst_deg,
            "deg C_n = n-1" if worst_deg else "degree mismatch",
        ))
    return out


def suite_orthogonality(pairs=DEFAULT_PAIRS, n_max: int = 6, tol: float = 1e-8) -> list:
    out = []
    spec = numerics.QuadratureSpec(target_abs_tol=1e-10)
    for a, b in pairs:
        params = trm.TrmParams(a, b)
        sols = [trm.trm_solution(params, n) for n in range(1, n_max + 1)]
        worst = 0.0
        for i in range(n_max):
            for j in range(i, n_max):
                est = numerics.integrate(
                    lambda z: trm.trm_wavefunction(sols[i], z) * trm.trm_wavefunction(sols[j], z),
                    0.0, math.pi, spec,
                )
                worst = max(worst, abs(est.require_converged() - (1.0 if i == j else 0.0)))
        out.append(_result(
            f"gram a={a} b={b} n<={n_max}", worst < tol, f"max |G - I| = {worst:.3e}",
        ))
    return out


def suite_normalization() -> list:
    out = []
    spec = numerics.QuadratureSpec(target_abs_tol=1e-12)
    worst = 0.0
    for b in (1, 5):
        for n in range(1, 7):
            sol = trm.trm_solution(trm.TrmParams(0, b), n)
            est = numerics.integrate(lambda z: trm.trm_wavefunction(sol, z) ** 2, 0.0, math.pi, spec)
            worst = max(worst, abs(est.require_converged() - 1.0))
    out.append(_result("closed-form norm a=0", worst < 1e-10, f"max |int R^2 - 1| = {worst:.3e}"))
    dev = abs(trm.trm_knorm(1, 1) - math.sqrt((1 - math.exp(-2 * math.pi)) / 8))
    out.append(_result("k1 antiderivative", dev < 1e-12, f"|K_1 - closed integral| = {dev:.3e}"))
    return out


def suite_fdm(a=Fraction(1), b=Fraction(50), grid: int = 4000, k: int = 5) -> list:
    params = trm.TrmParams(a, b)
    pot = lambda z: trm.trm_potential(params, z)
    exact = [float(trm.trm_level(params, n).epsilon) for n in range(1, k + 1)]
    coarse = numerics.eigenvalues_sturm(numerics.fdm_hamiltonian(pot, grid // 2, (0.0, math.pi)), k)
    fine = numerics.eigenvalues_sturm(numerics.fdm_hamiltonian(pot, grid + 1, (0.0, math.pi)), k)
    refined = [(4 * f - c) / 3 for c, f in zip(coarse, fine)]
    worst = max(abs((r - e) / e) for r, e in zip(refined, exact))
    orders = [math.log2(abs(c - e) / abs(f - e)) for c, f, e in zip(coarse, fine, exact)]
    order_ok = all(1.8 <= o <= 2.2 for o in orders)
    return [
        _result(f"fdm spectrum a={a} b={b} grid={grid}", worst < 1e-5, f"max rel dev = {worst:.3e}"),
        _result("fdm convergence order", order_ok, f"orders = {[round(o, 3) for o in orders]}"),
    ]


def suite_susy(a=Fraction(1), b=Fraction(50), grid: int = 20000) -> list:
    params = trm.TrmParams(a, b)
    u = susy.superpotential_from_gst(params)
    z = numerics.safe_grid(grid)
    out = []

    f1 = numerics.sample(lambda zz: trm.trm_wavefunction(trm.trm_solution(params, 1), zz), z).unit_normalized()
    worst = float(np.max(np.abs(susy.apply_ladder("-", u, f1).values)))
    out.append(_result("ground-state annihilation", worst < 1e-7, f"max |A- R_1| = {worst:.3e}"))

    shifted = trm.TrmParams(params.a + 1, params.b)
    worst = 0.0
    for n in range(2, 6):
        fn = numerics.sample(lambda zz: trm.trm_wavefunction(trm.trm_solution(params, n), zz), z)
        low = susy.apply_ladder("-", u, fn).unit_normalized()
        tgt = numerics.sample(
            lambda zz: trm.trm_wavefunction(trm.trm_solution(shifted, n - 1), zz), low.z
        ).unit_normalized()
        dev = min(float(np.max(np.abs(low.values - tgt.values))),
                  float(np.max(np.abs(low.values + tgt.values))))
        worst = max(worst, dev)
    out.append(_result("partner identity n=2..5", worst < 1e-7, f"max pointwise dev = {worst:.3e}"))

    zr = numerics.safe_grid(2000)
    eps1 = float(trm.trm_level(params, 1).epsilon)
    res = float(np.max(np.abs(u(zr) ** 2 - u.derivative(zr) + eps1 - trm.trm_potential(params, zr))))
    out.append(_result("riccati identity", res < 1e-10, f"max |U^2 - U' + eps_1 - v| = {res:.3e}"))

    exact_shift = all(
        trm.trm_level(trm.TrmParams(params.a + 1, params.b), n - 1).epsilon
        == trm.trm_level(params, n).epsilon
        for n in range(2, 11)
    )
    out.append(_result("exact level shift", exact_shift, "eps_{n-1}(a+1) = eps_n(a) exactly"))
    return out


def suite_classical(m_max: int = 8, tol: float = 1e-10) -> list:
    out = []
    presets = [
        rodrigues.hermite_weight(),
        rodrigues.laguerre_weight(Fraction(1, 2)),
        rodrigues.jacobi_weight(Fraction(1, 2), Fraction(3, 2)),
        rodrigues.gegenbauer_weight(Fraction(3, 4)),
        rodrigues.legendre_weight(),
        rodrigues.chebyshev1_weight(),
        rodrigues.chebyshev2_weight(),
    ]
    for spec in presets:
        members = [rodrigues.rodrigues_generate(spec, m) for m in range(m_max + 1)]
        residual_ok = all(rodrigues.sturm_liouville_residual(spec, r).is_zero for r in members)
        degree_ok = all(r.poly.degree == r.m for r in members)
        worst = _orthogonality_defect(spec, members)
        out.append(_result(
            f"{spec.label}",
            residual_ok and degree_ok and worst < tol,
            f"residual exact, max normalized <C_m, C_m'> = {worst:.3e}",
        ))
    return out


def _orthogonality_defect(spec, members) -> float:
    """Largest normalized off-diagonal inner product among the given members."""
    lo, hi = spec.domain
    polys = [r.poly.to_float() for r in members]
    qspec = numerics.QuadratureSpec(target_abs_tol=1e-13, target_rel_tol=1e-13)
    norms = []
    for p in polys:
        est = numerics.integrate(
            lambda x, dlo, dhi: spec.weight(x, dlo, dhi) * p(x) ** 2,
            lo, hi, qspec, distance_form=True,
        )
        norms.append(math.sqrt(est.require_converged()))
    worst = 0.0
    pair_spec = numerics.QuadratureSpec(target_abs_tol=1e-12, target_rel_tol=1e-12)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            est = numerics.integrate(
                lambda x, dlo, dhi: spec.weight(x, dlo, dhi) * polys[i](x) * polys[j](x),
                lo, hi, pair_spec, distance_form=True,
            )
            worst = max(worst, abs(est.value) / (norms[i] * norms[j]))
    return worst


SUITES = {
    "polynomials": suite_polynomials,
    "orthogonality": suite_orthogonality,
    "normalization": suite_normalization,
    "fdm": suite_fdm,
    "susy": suite_susy,
    "classical": suite_classical,
}
