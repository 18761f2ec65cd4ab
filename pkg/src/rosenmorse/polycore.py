"""Exact and floating polynomial arithmetic.

Every closed form in this package is built from dense univariate polynomials.
The same algorithms run over two scalar kinds: exact rationals
(``fractions.Fraction``, including plain ints) and binary floats.  The exact
path is used for all structural work; the float path only for
evaluation-heavy numerics.  Values are immutable and freely shareable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Exact scalar type used for all coefficient work.
Rational = Fraction


def _sdiv(x, y):
    """Scalar division that stays exact for exact scalars."""
    if isinstance(x, float) or isinstance(y, float):
        return x / y
    return Fraction(x) / Fraction(y)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; ``coeffs[k]`` multiplies x**k.

    The canonical zero polynomial has an empty coefficient tuple; any other
    polynomial has a nonzero leading coefficient.  Construction normalizes.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        cs = tuple(self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def has_float_scalars(self) -> bool:
        return any(isinstance(c, float) for c in self.coeffs)

    def coeff(self, k: int):
        """Coefficient of x**k (0 beyond the stored degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        p, q = self.coeffs, other.coeffs
        if len(p) < len(q):
            p, q = q, p
        out = list(p)
        for i, c in enumerate(q):
            out[i] = out[i] + c
        return Polynomial(out)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            p, q = self.coeffs, other.coeffs
            # Compensated summation keeps the float recursion path tight.
            acc = math.fsum if (self.has_float_scalars or other.has_float_scalars) else sum
            out = []
            for k in range(len(p) + len(q) - 1):
                lo = max(0, k - len(q) + 1)
                hi = min(k + 1, len(p))
                out.append(acc(p[i] * q[k - i] for i in range(lo, hi)))
            return Polynomial(out)
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, k):
        if k == 0:
            return Polynomial()
        return Polynomial(tuple(k * c for c in self.coeffs))

    def __divmod__(self, other):
        """Long division; exact over rationals."""
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quot = [0] * (dq + 1)
        dlead = other.leading
        for k in range(dq, -1, -1):
            c = _sdiv(rem[k + other.degree], dlead)
            quot[k] = c
            if c != 0:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * oc
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus and evaluation ---------------------------------------------

    def diff(self):
        """Formal derivative."""
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x):
        """Horner evaluation; exact when both scalars are exact."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_float(self):
        """Nearest-binary-float image of the coefficients."""
        return Polynomial(tuple(float(c) for c in self.coeffs))

    def monic_positive(self):
        """Same polynomial with the sign flipped so the leading coefficient is positive."""
        if self.is_zero:
            return self
        return -self if self.leading < 0 else self

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            term = "" if (c == 1 and k) else ("-" if (c == -1 and k) else str(c))
            if k:
                term += ("" if term in ("", "-") else "*") + ("x" if k == 1 else f"x^{k}")
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor over exact scalars."""
    if p.has_float_scalars or q.has_float_scalars:
        raise TypeError("polynomial gcd requires exact scalars")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.scale(_sdiv(1, a.leading))


@dataclass(frozen=True)
class RationalFunction:
    """Quotient num/den of polynomials.

    Over exact scalars the representation is reduced (no common polynomial
    factor) and the denominator is monic.
    """

    num: Polynomial
    den: Polynomial = Polynomial((1,))

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = self.num, self.den
        if not (num.has_float_scalars or den.has_float_scalars):
            if num.is_zero:
                den = Polynomial((1,))
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
                lead = den.leading
                if lead != 1:
                    num = num.scale(_sdiv(1, lead))
                    den = den.scale(_sdiv(1, lead))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return RationalFunction(self.num * other, self.den)
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.num, self.den * other.den)
        return NotImplemented

    def mul_exact(self, p: Polynomial) -> Polynomial:
        """Product with a polynomial, required to land back in the polynomial ring.

        Raises ValueError when den does not divide num * p.
        """
        prod = self.num * p
        quot, rem = divmod(prod, self.den)
        if prod.has_float_scalars or self.den.has_float_scalars:
            scale = max((abs(c) for c in prod.coeffs), default=0.0)
            if any(abs(c) > 1e-9 * (1.0 + scale) for c in rem.coeffs):
                raise ValueError("rational function product does not reduce to a polynomial")
        elif not rem.is_zero:
            raise ValueError("rational function product does not reduce to a polynomial")
        return quot
