"""Generic engine for orthogonal polynomial families defined by a weight.

A family is specified by a polynomial s(x) of degree at most two and the
logarithmic derivative w'(x)/w(x) of a weight function.  The m-th member is
the m-th derivative of w * s**m divided by w; it is produced here by the
equivalent first-order recursion

    T_0 = 1,    T_{j+1} = (w'/w * s) T_j + (m - j) s' T_j + s T_j',

which stays inside the polynomial ring exactly when (w'/w) * s is a
polynomial.  Each member solves the self-adjoint second order equation

    s C'' + (w'/w * s + s') C' + lam C = 0

with eigenvalue lam = -m [C_1' + (m - 1) s_2], s_2 the x^2 coefficient of s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as _np

from .polycore import Polynomial, RationalFunction


def _exact(v):
    """Ints become Fractions; Fractions pass through; floats select the float path."""
    if isinstance(v, bool):
        raise TypeError("boolean is not a scalar parameter")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (Fraction, float)):
        return v
    raise TypeError(f"unsupported scalar parameter {v!r}")


@dataclass(frozen=True)
class WeightSpec:
    """Weight description driving the generation engine.

    s: polynomial of degree <= 2.
    logw: w'(x)/w(x) as a rational function.
    domain: orthogonality interval, endpoints possibly infinite.
    weight: optional pointwise evaluator w(x, dlo, dhi) used by orthogonality
        checks, written against the distances to the domain endpoints so that
        endpoint-singular weights stay accurate; the engine itself never
        needs it.
    """

    s: Polynomial
    logw: RationalFunction
    domain: tuple
    label: str
    weight: object = None

    def __post_init__(self):
        if self.s.is_zero or self.s.degree > 2:
            raise ValueError("s must be a nonzero polynomial of degree <= 2")
        if not self.domain[0] < self.domain[1]:
            raise ValueError("empty weight domain")
        self.drift()  # the generation recursion must stay inside the polynomial ring

    def drift(self) -> Polynomial:
        """The polynomial (w'/w) * s; raises if the product leaves the ring."""
        try:
            return self.logw.mul_exact(self.s)
        except ValueError:
            raise ValueError(
                f"weight {self.label!r}: (w'/w) * s is not a polynomial, "
                "the derivative recursion would leave the polynomial ring"
            ) from None

    def first_order_coefficient(self) -> Polynomial:
        """Coefficient of C' in the self-adjoint equation: (w'/w) s + s'."""
        return self.drift() + self.s.diff()


@dataclass(frozen=True)
class RodriguesResult:
    """Member polynomial of a family together with its ODE eigenvalue."""

    poly: Polynomial
    m: int
    lam: object


def rodrigues_generate(spec: WeightSpec, m: int) -> RodriguesResult:
    """Unnormalized m-th member of the family described by spec.

    The output is the raw recursion result, sign-flipped when needed so the
    leading coefficient is positive.  Normalization constants are a separate
    concern handled by callers.
    """
    if m < 0:
        raise ValueError("member index must be non-negative")
    q = spec.drift()
    s = spec.s
    ds = s.diff()
    t = Polynomial((1,))
    for j in range(m):
        t = q * t + (m - j) * (ds * t) + s * t.diff()
    c1 = q + ds
    lam = -m * (c1.coeff(1) + (m - 1) * s.coeff(2))
    return RodriguesResult(poly=t.monic_positive(), m=m, lam=lam)


def sturm_liouville_residual(spec: WeightSpec, result: RodriguesResult) -> Polynomial:
    """Exact residual s C'' + ((w'/w) s + s') C' + lam C; zero for valid members."""
    c = result.poly
    return spec.s * c.diff().diff() + spec.first_order_coefficient() * c.diff() + result.lam * c


# -- weight presets ----------------------------------------------------------

_INF = math.inf


def hermite_weight() -> WeightSpec:
    """w = exp(-x^2) on the whole line, s = 1."""
    return WeightSpec(
        s=Polynomial((1,)),
        logw=RationalFunction(Polynomial((0, -2))),
        domain=(-_INF, _INF),
        label="hermite",
        weight=lambda x, dlo, dhi: _np.exp(-x * x),
    )


def laguerre_weight(nu) -> WeightSpec:
    """w = x^nu exp(-x) on [0, inf), s = x; requires nu > -1."""
    nu = _exact(nu)
    if not nu > -1:
        raise ValueError("laguerre weight requires nu > -1")
    nuf = float(nu)
    return WeightSpec(
        s=Polynomial((0, 1)),
        logw=RationalFunction(Polynomial((nu, -1)), Polynomial((0, 1))),
        domain=(0.0, _INF),
        label=f"laguerre({nu})",
        weight=lambda x, dlo, dhi: dlo**nuf * _np.exp(-x),
    )


def jacobi_weight(nu, mu) -> WeightSpec:
    """w = (1-x)^nu (1+x)^mu on [-1, 1], s = 1 - x^2; requires nu, mu > -1."""
    nu, mu = _exact(nu), _exact(mu)
    if not (nu > -1 and mu > -1):
        raise ValueError("jacobi weight requires nu > -1 and mu > -1")
    nuf, muf = float(nu), float(mu)
    return WeightSpec(
        s=Polynomial((1, 0, -1)),
        logw=RationalFunction(Polynomial((mu - nu, -(nu + mu))), Polynomial((1, 0, -1))),
        domain=(-1.0, 1.0),
        label=f"jacobi({nu},{mu})",
        weight=lambda x, dlo, dhi: dhi**nuf * dlo**muf,
    )


def gegenbauer_weight(lam) -> WeightSpec:
    """w = (1-x^2)^(lam - 1/2) on [-1, 1], s = 1 - x^2; requires lam > -1/2."""
    lam = _exact(lam)
    if not 2 * lam > -1:
        raise ValueError("gegenbauer weight requires lam > -1/2")
    ex = float(lam) - 0.5
    return WeightSpec(
        s=Polynomial((1, 0, -1)),
        logw=RationalFunction(Polynomial((0, -(2 * lam - 1))), Polynomial((1, 0, -1))),
        domain=(-1.0, 1.0),
        label=f"gegenbauer({lam})",
        weight=lambda x, dlo, dhi: (dlo * dhi) ** ex,
    )


def legendre_weight() -> WeightSpec:
    """w = 1 on [-1, 1], s = 1 - x^2."""
    return WeightSpec(
        s=Polynomial((1, 0, -1)),
        logw=RationalFunction(Polynomial()),
        domain=(-1.0, 1.0),
        label="legendre",
        weight=lambda x, dlo, dhi: _np.ones_like(x),
    )


def chebyshev1_weight() -> WeightSpec:
    """w = (1-x^2)^(-1/2) on [-1, 1], s = 1 - x^2."""
    return WeightSpec(
        s=Polynomial((1, 0, -1)),
        logw=RationalFunction(Polynomial((0, 1)), Polynomial((1, 0, -1))),
        domain=(-1.0, 1.0),
        label="chebyshev1",
        weight=lambda x, dlo, dhi: 1.0 / _np.sqrt(dlo * dhi),
    )


def chebyshev2_weight() -> WeightSpec:
    """w = (1-x^2)^(1/2) on [-1, 1], s = 1 - x^2."""
    return WeightSpec(
        s=Polynomial((1, 0, -1)),
        logw=RationalFunction(Polynomial((0, -1)), Polynomial((1, 0, -1))),
        domain=(-1.0, 1.0),
        label="chebyshev2",
        weight=lambda x, dlo, dhi: _np.sqrt(dlo * dhi),
    )


def arccot_weight(mu, c) -> WeightSpec:
    """w = (1+x^2)^(-mu) exp(-c * arccot x) on the whole line, s = 1 + x^2.

    Family behind the cotangent-variable bound states; requires mu > 0 so the
    weight decays at both ends.  d(arccot x)/dx = -1/(1+x^2), hence
    w'/w = (-2 mu x + c) / (1 + x^2).
    """
    mu, c = _exact(mu), _exact(c)
    if not mu > 0:
        raise ValueError("arccot weight requires mu > 0")
    muf, cf = float(mu), float(c)
    return WeightSpec(
        s=Polynomial((1, 0, 1)),
        logw=RationalFunction(Polynomial((c, -2 * mu)), Polynomial((1, 0, 1))),
        domain=(-_INF, _INF),
        label=f"arccot({mu},{c})",
        weight=lambda x, dlo, dhi: (1.0 + x * x) ** (-muf)
        * _np.exp(-cf * (0.5 * _np.pi - _np.arctan(x))),
    )


def table1_presets() -> list:
    """All built-in weight presets at default parameters.

    Classical families first (generic rational parameters where a parameter is
    required), then the arccot family at mu=2, c=1.
    """
    return [
        hermite_weight(),
        laguerre_weight(Fraction(1, 2)),
        jacobi_weight(Fraction(1, 2), Fraction(3, 2)),
        gegenbauer_weight(Fraction(3, 4)),
        legendre_weight(),
        chebyshev1_weight(),
        chebyshev2_weight(),
        arccot_weight(2, 1),
    ]
