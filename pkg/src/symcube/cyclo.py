"""Exact arithmetic with Q-linear combinations of roots of unity.

A value is stored as {exponent: coefficient} meaning
sum_e  coeff_e * exp(2*pi*i*e), with exponents Fractions reduced mod 1.
The representation is lazy (ties like 1 + zeta_2 = 0 are not collapsed on
construction, which keeps monomials monomial), but equality and the zero
test are complete: the difference is reduced modulo the cyclotomic
polynomial of the common order, so two values compare equal exactly when
they are the same algebraic number.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def _cyclotomic(n: int):
    """Ascending integer coefficients of the n-th cyclotomic polynomial.

    Computed by exact division: x^n - 1 = prod over d | n of Phi_d.
    """
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            divisor = _cyclotomic(d)
            poly = _polydiv_exact(poly, divisor)
    return tuple(poly)


def _polydiv_exact(num, den):
    """Quotient of ascending-coefficient polynomials; remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    out = [Fraction(0)] * (len(num) - dd)
    for j in range(len(num) - 1, dd - 1, -1):
        f = num[j] / den[dd]
        out[j - dd] = f
        if f:
            for k in range(dd + 1):
                num[j - dd + k] -= f * den[k]
    assert all(x == 0 for x in num[:dd]), "non-exact polynomial division"
    return out


def _terms_are_zero(terms) -> bool:
    """Whether sum_e c_e zeta^e vanishes, decided mod the cyclotomic polynomial."""
    if not terms:
        return True
    order = 1
    for e in terms:
        order = math.lcm(order, e.denominator)
    coeffs = [Fraction(0)] * order
    for e, c in terms.items():
        coeffs[int(e * order) % order] += c
    phi = _cyclotomic(order)
    dd = len(phi) - 1
    for j in range(order - 1, dd - 1, -1):
        f = coeffs[j]
        if f:
            for k in range(dd + 1):
                coeffs[j - dd + k] -= f * phi[k]
    return all(x == 0 for x in coeffs[:dd])


class Cyclo:
    """Formal rational combination of roots of unity."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    e = Fraction(e) % 1
                    self.terms[e] = self.terms.get(e, Fraction(0)) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def root_of_unity(cls, k, n) -> "Cyclo":
        """exp(2*pi*i*k/n)."""
        if n == 0:
            raise ZeroDivisionError("root_of_unity order 0")
        return cls({Fraction(k, n): Fraction(1)})

    @classmethod
    def from_rational(cls, q) -> "Cyclo":
        return cls({Fraction(0): Fraction(q)})

    @classmethod
    def gaussian(cls, re, im=0) -> "Cyclo":
        """The Gaussian rational re + im*i, as a combination of 1 and zeta_4."""
        return cls({Fraction(0): Fraction(re), Fraction(1, 4): Fraction(im)})

    @classmethod
    def one(cls) -> "Cyclo":
        return cls.from_rational(1)

    @classmethod
    def zero(cls) -> "Cyclo":
        return cls()

    @staticmethod
    def coerce(x) -> "Cyclo":
        if isinstance(x, Cyclo):
            return x
        return Cyclo.from_rational(x)

    def __bool__(self):
        if not self.terms:
            return False
        if len(self.terms) == 1:
            return True   # a single c*zeta^e with c != 0 never vanishes
        return not _terms_are_zero(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        if self.terms == other.terms:
            return True
        return _terms_are_zero((self - other).terms)

    # equal values can carry different term dictionaries, so there is no
    # cheap representation-independent hash
    __hash__ = None

    def __add__(self, other):
        o = Cyclo.coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Cyclo(out)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Cyclo.coerce(other))

    def __rsub__(self, other):
        return Cyclo.coerce(other) + (-self)

    def __mul__(self, other):
        o = Cyclo.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = (e1 + e2) % 1
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Cyclo(out)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "Cyclo":
        """Multiplicative inverse; defined for single-term values only."""
        if not self.is_monomial():
            raise ValueError("inverse defined only for monomial values")
        (e, c), = self.terms.items()
        return Cyclo({-e % 1: Fraction(1) / c})

    def __pow__(self, n: int) -> "Cyclo":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclo.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Cyclo":
        return Cyclo({-e % 1: c for e, c in self.terms.items()})

    def to_complex(self) -> complex:
        return sum((complex(c) * cmath.exp(2j * cmath.pi * float(e))
                    for e, c in self.terms.items()), 0j)

    def __abs__(self) -> float:
        return abs(self.to_complex())

    def __repr__(self):
        if not self.terms:
            return "Cyclo(0)"
        bits = []
        for e, c in sorted(self.terms.items()):
            if e == 0:
                bits.append(str(c))
            else:
                pre = "" if c == 1 else f"{c}*"
                bits.append(f"{pre}zeta^({e})")
        return "Cyclo(" + " + ".join(bits) + ")"


def is_exact(x) -> bool:
    """True when x participates in the exact arithmetic path."""
    return isinstance(x, (Cyclo, int, Fraction))
