"""Local L-factors as reciprocal polynomials in T = q^{-s}.

Every factor is stored through the polynomial P(T) = prod_i (1 - lambda_i T)
over its eigenvalue list, so the local L-value is 1/P(q^{-s}) and
factorization identities become exact polynomial equalities, checked
coefficientwise.  Coefficients are complex doubles, or exact Cyclo values
when the Satake parameters are roots of unity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .cyclo import Cyclo
from .satake import SatakeClass, twist


class RepTag(enum.Enum):
    STANDARD = "standard"
    SYM2 = "sym2"
    SYM3 = "sym3"
    ADJOINT_CUBE = "adjoint-cube"
    WEDGE2 = "wedge2"
    GJ_ADJOINT = "gj-adjoint"
    RANKIN_SELBERG = "rankin-selberg"
    TRIPLE = "triple"


TAG_DEGREE = {
    RepTag.STANDARD: 2, RepTag.SYM2: 3, RepTag.SYM3: 4,
    RepTag.ADJOINT_CUBE: 4, RepTag.WEDGE2: 1, RepTag.GJ_ADJOINT: 3,
    RepTag.RANKIN_SELBERG: 6, RepTag.TRIPLE: 8,
}


def _one_like(x):
    return Cyclo.one() if isinstance(x, Cyclo) else 1.0 + 0j


def _inv(x):
    if isinstance(x, Cyclo):
        return x.inverse()
    if x == 0:
        raise ZeroDivisionError("degenerate Satake parameter")
    return 1.0 / x


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def poly_from_eigenvalues(eigen: Sequence) -> list:
    """Coefficients of prod (1 - e T), in the order given (no re-sorting)."""
    coeffs = [_one_like(eigen[0]) if eigen else 1.0 + 0j]
    for e in eigen:
        coeffs = poly_mul(coeffs, [_one_like(e), -e])
    return coeffs


@dataclass(frozen=True)
class ReciprocalPoly:
    """Dense polynomial P(T) with P(0) = 1; the local factor is 1/P."""

    coeffs: tuple
    q: int = 0

    def __init__(self, coeffs, q: int = 0):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("empty coefficient list")
        lead = coeffs[0]
        one = Cyclo.one() if isinstance(lead, Cyclo) else 1
        if not (lead == one or abs(complex(lead) - 1) < 1e-12):
            raise ValueError("constant coefficient must be 1")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "q", q)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree_in_rational_prime(self) -> int:
        """Degree as a polynomial in p^{-s}; doubled for inert-prime factors."""
        return self.degree

    def is_exact(self) -> bool:
        return any(isinstance(c, Cyclo) for c in self.coeffs)

    def to_complex(self) -> "ReciprocalPoly":
        return ReciprocalPoly(
            [c.to_complex() if isinstance(c, Cyclo) else complex(c)
             for c in self.coeffs], self.q)

    def evaluate(self, t: complex) -> complex:
        val = 0j
        for c in reversed(self.coeffs):
            cc = c.to_complex() if isinstance(c, Cyclo) else complex(c)
            val = val * t + cc
        return val

    def lvalue(self, s: complex) -> complex:
        """1 / P(q^{-s})."""
        if self.q < 2:
            raise ValueError("no residue cardinality attached")
        return 1.0 / self.evaluate(self.q ** (-s))

    def __mul__(self, other: "ReciprocalPoly") -> "ReciprocalPoly":
        q = self.q or other.q
        return ReciprocalPoly(poly_mul(self.coeffs, other.coeffs), q)

    def max_coeff_diff(self, other: "ReciprocalPoly") -> float:
        """Largest coefficient discrepancy, scaled by the largest coefficient.

        The scaling keeps the tolerance meaningful away from the unitary
        locus: with parameters bounded by B the coefficients themselves grow
        like B^(3 deg), far past any fixed absolute tolerance.  Equal
        exact-mode polynomials return exactly 0.0.
        """
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        if self.is_exact() and other.is_exact():
            if all(Cyclo.coerce(x) == Cyclo.coerce(y) for x, y in zip(a, b)):
                return 0.0
        worst = 0.0
        scale = 1.0
        for x, y in zip(a, b):
            xc = x.to_complex() if isinstance(x, Cyclo) else complex(x)
            yc = y.to_complex() if isinstance(y, Cyclo) else complex(y)
            worst = max(worst, abs(xc - yc))
            scale = max(scale, abs(xc), abs(yc))
        return worst / scale


def eigenvalues(tag: RepTag, c: SatakeClass) -> list:
    """Eigenvalue list of the representation at the class (alpha, beta)."""
    a, b = c.alpha, c.beta
    if tag is RepTag.STANDARD:
        return [a, b]
    if tag is RepTag.SYM2:
        return [a * a, a * b, b * b]
    if tag is RepTag.SYM3:
        return [a * a * a, a * a * b, a * b * b, b * b * b]
    if tag is RepTag.ADJOINT_CUBE:
        return [a * a * _inv(b), a, b, _inv(a) * b * b]
    if tag is RepTag.WEDGE2:
        return [a * b]
    if tag is RepTag.GJ_ADJOINT:
        return [a * _inv(b), _one_like(a), _inv(a) * b]
    if tag is RepTag.TRIPLE:
        # tensor cube: alpha^3 once, alpha^2 beta and alpha beta^2 three times
        return [a * a * a,
                a * a * b, a * a * b, a * a * b,
                a * b * b, a * b * b, a * b * b,
                b * b * b]
    raise ValueError(f"{tag} has no direct eigenvalue list")


def local_factor(tag: RepTag, c: SatakeClass) -> ReciprocalPoly:
    return ReciprocalPoly(poly_from_eigenvalues(eigenvalues(tag, c)), c.q)


def rankin_selberg(a: SatakeClass, b_eigen: Sequence) -> ReciprocalPoly:
    """P(T) = prod_{i,j} (1 - a_i b_j T) over pairwise parameter products."""
    if not b_eigen:
        raise ValueError("empty eigenvalue list")
    pairs = [x * y for x in (a.alpha, a.beta) for y in b_eigen]
    return ReciprocalPoly(poly_from_eigenvalues(pairs), a.q)


def triple_product(c: SatakeClass) -> ReciprocalPoly:
    return local_factor(RepTag.TRIPLE, c)


def check_triple_identity(c: SatakeClass) -> float:
    """Triple product against sym-cube times the squared twisted standard factor."""
    omega = c.central_character()
    twisted = twist(c, omega)
    std = local_factor(RepTag.STANDARD, twisted)
    rhs = local_factor(RepTag.SYM3, c) * std * std
    return triple_product(c).max_coeff_diff(rhs)


def check_twist_identity(c: SatakeClass) -> float:
    """Sym-cube factor against the adjoint-cube factor of the central twist."""
    lhs = local_factor(RepTag.SYM3, c)
    rhs = local_factor(RepTag.ADJOINT_CUBE, twist(c, c.central_character()))
    return lhs.max_coeff_diff(rhs)


def check_gj_identity(c: SatakeClass) -> float:
    """Division-free form of: adjoint-cube = (pi x adjoint-lift) / standard."""
    lift = eigenvalues(RepTag.GJ_ADJOINT, c)
    lhs = rankin_selberg(c, lift)
    rhs = local_factor(RepTag.ADJOINT_CUBE, c) * local_factor(RepTag.STANDARD, c)
    return lhs.max_coeff_diff(rhs)
