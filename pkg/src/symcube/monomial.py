"""The dihedral case: local parameters induced from quadratic-field Hecke data.

Splitting types and character values are input data (class field theory is
not performed here).  Inert primes are handled on the 4x4 matrix level so no
square roots of character values are ever materialized; all inert factors
come out as polynomials in T^2, matching the norm of an inert prime being
p^2.  With root-of-unity character values the whole pipeline runs in exact
cyclotomic arithmetic and the factorization checks return error 0 exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .cyclo import Cyclo
from .localfactor import ReciprocalPoly, poly_mul

SPLIT = "split"
INERT = "inert"


@dataclass(frozen=True)
class HeckeLocalData:
    """Character data above one rational prime p."""

    p: int
    splitting: str
    chi_p: object                 # value at a prime above p (complex or Cyclo)
    chi_pbar: object = None       # second value, split case only

    def __post_init__(self):
        if self.splitting not in (SPLIT, INERT):
            raise ValueError(f"splitting must be split or inert, got {self.splitting!r}")
        if self.splitting == SPLIT and self.chi_pbar is None:
            raise ValueError(f"split entry at p={self.p} needs two character values")
        if self.splitting == INERT and self.chi_pbar is not None:
            raise ValueError(f"inert entry at p={self.p} carries a single value")
        if not self.chi_p or (self.splitting == SPLIT and not self.chi_pbar):
            raise ValueError("character values must be nonzero")

    def is_exact(self) -> bool:
        vals = [self.chi_p] + ([self.chi_pbar] if self.chi_pbar is not None else [])
        return all(isinstance(v, Cyclo) for v in vals)


@dataclass(frozen=True)
class InducedClass:
    """Frobenius matrix of the induced two-dimensional local parameter."""

    frobenius: Tuple[Tuple[object, object], Tuple[object, object]]

    def determinant(self):
        (a, b), (c, d) = self.frobenius
        return a * d - b * c


def induced_local(d: HeckeLocalData) -> InducedClass:
    """Split: diag(chi_P, chi_Pbar).  Inert: [[0, chi_P], [1, 0]]."""
    zero = Cyclo.zero() if d.is_exact() else 0j
    one = Cyclo.one() if d.is_exact() else 1.0 + 0j
    if d.splitting == SPLIT:
        m = ((d.chi_p, zero), (zero, d.chi_pbar))
    else:
        m = ((zero, d.chi_p), (one, zero))
    return InducedClass(m)


def _one_for(m):
    return Cyclo.one() if any(isinstance(x, Cyclo) for row in m for x in row) else 1.0 + 0j


def _zero_for(m):
    return Cyclo.zero() if any(isinstance(x, Cyclo) for row in m for x in row) else 0j


def sym_cube_matrix(m):
    """Explicit 4x4 matrix of sym^3 on the basis x^3, x^2 y, x y^2, y^3."""
    (a, b), (c, d) = m
    # x -> a x + c y,  y -> b x + d y; expand images of the four monomials
    cols = [
        [a * a * a, 3 * (a * a * c), 3 * (a * c * c), c * c * c],
        [a * a * b, a * a * d + 2 * (a * b * c), b * c * c + 2 * (a * c * d), c * c * d],
        [a * b * b, b * b * c + 2 * (a * b * d), a * d * d + 2 * (b * c * d), c * d * d],
        [b * b * b, 3 * (b * b * d), 3 * (b * d * d), d * d * d],
    ]
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


_PERMS4 = []


def _perms4():
    if not _PERMS4:
        import itertools
        for perm in itertools.permutations(range(4)):
            sign = 1
            for i in range(4):
                for j in range(i + 1, 4):
                    if perm[i] > perm[j]:
                        sign = -sign
            _PERMS4.append((perm, sign))
    return _PERMS4


def _char_poly_4x4(n, one, zero):
    """det(I - N T) by permutation expansion; division-free, any scalar ring."""
    out = [zero] * 5
    for perm, sign in _perms4():
        term = [one]  # polynomial in T
        for i in range(4):
            entry = [one if i == perm[i] else zero, -n[i][perm[i]]]
            term = poly_mul(term, entry)
        if sign < 0:
            term = [-t for t in term]
        for k, t in enumerate(term):
            out[k] = out[k] + t
    return out


def symcube_char_poly(m) -> ReciprocalPoly:
    """det(I - sym^3(M) T) as a degree-4 polynomial in T."""
    n = sym_cube_matrix(m)
    return ReciprocalPoly(_char_poly_4x4(n, _one_for(n), _zero_for(n)))


def adjointcube_char_poly(m) -> ReciprocalPoly:
    """det(I - sym^3(M) det(M)^{-1} T), the determinant-twisted cube."""
    (a, b), (c, d) = m
    det = a * d - b * c
    if not det:
        raise ValueError("singular matrix has no adjoint-cube factor")
    dinv = det.inverse() if isinstance(det, Cyclo) else 1.0 / det
    n = sym_cube_matrix(m)
    n = tuple(tuple(x * dinv for x in row) for row in n)
    return ReciprocalPoly(_char_poly_4x4(n, _one_for(n), _zero_for(n)))


def _char_power(v, e: int):
    if isinstance(v, Cyclo):
        return v ** e
    return v ** e if e >= 0 else (1.0 / v) ** (-e)


def hecke_factor(d: HeckeLocalData, exponents: Tuple[int, int]) -> ReciprocalPoly:
    """Local factor at p of the character chi^a * (chi')^b, in T = p^{-s}.

    The conjugate character chi' swaps the two primes above a split p and
    fixes an inert prime, so the inert factor is 1 - chi^{a+b}(p) T^2.
    """
    a, b = exponents
    one = Cyclo.one() if d.is_exact() else 1.0 + 0j
    zero = Cyclo.zero() if d.is_exact() else 0j
    if d.splitting == SPLIT:
        v1 = _char_power(d.chi_p, a) * _char_power(d.chi_pbar, b)
        v2 = _char_power(d.chi_pbar, a) * _char_power(d.chi_p, b)
        coeffs = poly_mul([one, -v1], [one, -v2])
    else:
        v = _char_power(d.chi_p, a + b)
        coeffs = [one, zero, -v]
    return ReciprocalPoly(coeffs, d.p)


def check_monomial_r3(d: HeckeLocalData) -> float:
    """Sym-cube factor of the induced class against chi^3 times chi^2 chi'."""
    lhs = symcube_char_poly(induced_local(d).frobenius)
    rhs = hecke_factor(d, (3, 0)) * hecke_factor(d, (2, 1))
    return lhs.max_coeff_diff(rhs)


def check_monomial_r30(d: HeckeLocalData) -> float:
    """Adjoint-cube factor of the induced class against chi^2 chi'^{-1} times chi."""
    lhs = adjointcube_char_poly(induced_local(d).frobenius)
    rhs = hecke_factor(d, (2, -1)) * hecke_factor(d, (1, 0))
    return lhs.max_coeff_diff(rhs)


HAS_POLE = "has-pole-at-0-and-1"
ENTIRE = "entire"


@dataclass(frozen=True)
class PoleVerdict:
    kind: str
    poles: Tuple[Fraction, ...] = ()
    simple: bool = True


def pole_criterion(order_of_chi: int, chi_is_trivial: bool = False) -> PoleVerdict:
    """Pole locus of the completed sym-cube L-function in the dihedral case.

    Poles (simple, at s = 0 and 1) occur exactly when chi^3 = 1; a trivial
    chi is rejected because the induced representation is then not cuspidal.
    """
    if order_of_chi < 1:
        raise ValueError("character order must be >= 1")
    if chi_is_trivial or order_of_chi == 1:
        raise ValueError("trivial chi gives a non-cuspidal induced representation")
    if order_of_chi == 3:
        return PoleVerdict(HAS_POLE, poles=(Fraction(0), Fraction(1)))
    return PoleVerdict(ENTIRE)
