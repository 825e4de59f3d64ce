"""Unramified local parameters of GL(2): construction and classification.

A Satake class is the unordered pair {alpha, beta} together with the residue
cardinality q.  Classes built from Hecke eigenvalues use the arithmetic
normalization a_p = p^{(k-1)/2} (alpha + beta), so alpha*beta equals the
central character value (1 for trivial nebentypus).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from .cyclo import Cyclo

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class SatakeClass:
    """Unramified parameter (alpha, beta, q); (alpha, beta) unordered."""

    alpha: complex
    beta: complex
    q: int

    def central_character(self):
        """omega(uniformizer) = alpha * beta."""
        return self.alpha * self.beta

    def parameters(self):
        return (self.alpha, self.beta)

    def same_class(self, other: "SatakeClass", tol: float = 1e-12) -> bool:
        """Equality as unordered pairs, up to tol."""
        if self.q != other.q:
            return False
        a, b = complex(_as_complex(self.alpha)), complex(_as_complex(self.beta))
        c, d = complex(_as_complex(other.alpha)), complex(_as_complex(other.beta))
        return (abs(a - c) <= tol and abs(b - d) <= tol) or \
               (abs(a - d) <= tol and abs(b - c) <= tol)


def _as_complex(x) -> complex:
    if isinstance(x, Cyclo):
        return x.to_complex()
    return complex(x)


def satake_from_hecke(a_p, p: int, k: int, omega_p=1.0) -> SatakeClass:
    """Satake class of the local component attached to Hecke eigenvalue a_p.

    alpha, beta are the roots of X^2 - (a_p p^{-(k-1)/2}) X + omega_p.
    a_p may be an arbitrary-precision integer; it is scaled exactly before
    the single conversion to float.
    """
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    if abs(abs(complex(omega_p)) - 1.0) > 1e-6:
        raise ValueError("|omega_p| must be 1")
    # p^{(k-1)/2} via exact integer power under the square root
    t = complex(a_p) / math.sqrt(float(p ** (k - 1)))
    omega = complex(omega_p)
    disc = t * t - 4 * omega
    sq = cmath.sqrt(disc)
    # larger-magnitude root first for stability, partner by Vieta
    r1 = (t + sq) / 2 if abs(t + sq) >= abs(t - sq) else (t - sq) / 2
    r2 = omega / r1 if r1 != 0 else t - r1
    alpha, beta = _order_pair(r1, r2)
    return SatakeClass(alpha, beta, p)


def _order_pair(a: complex, b: complex):
    """Deterministic tie-break: alpha has Im >= 0; if both real, |alpha| >= |beta|."""
    if abs(a.imag) < 1e-14 and abs(b.imag) < 1e-14:
        return (a, b) if abs(a) >= abs(b) else (b, a)
    return (a, b) if a.imag >= b.imag else (b, a)


def is_tempered(c: SatakeClass, tol: float = DEFAULT_TOL) -> bool:
    """Both parameters on the unit circle, up to tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return (abs(abs(_as_complex(c.alpha)) - 1.0) <= tol
            and abs(abs(_as_complex(c.beta)) - 1.0) <= tol)


def complementary_params(c: SatakeClass, tol: float = DEFAULT_TOL):
    """Recover (mu, r) when {alpha, beta} = {mu q^{-r}, mu q^{r}}, 0 < r < 1/2.

    Returns None when the class is not a complementary-series parameter.
    """
    a, b = _as_complex(c.alpha), _as_complex(c.beta)
    if abs(a) < abs(b):
        a, b = b, a
    # now |a| >= |b|; expect a = mu q^r, b = mu q^{-r}
    if abs(a * b) < tol:
        return None
    if abs(abs(a) * abs(b) - 1.0) > tol:
        return None
    r = math.log(abs(a)) / math.log(c.q)
    if r <= tol or r >= 0.5 - tol:
        return None
    mu_a, mu_b = a / abs(a), b / abs(b)
    if abs(mu_a - mu_b) > tol:
        return None
    return (mu_a, r)


def twist(c: SatakeClass, chi_p) -> SatakeClass:
    """Class of the twist by an unramified character with value chi_p."""
    if not chi_p:
        raise ValueError("twist by zero")
    return SatakeClass(c.alpha * chi_p, c.beta * chi_p, c.q)


def contragredient(c: SatakeClass) -> SatakeClass:
    """Class with inverted parameters; inverts the central character."""
    a, b = c.alpha, c.beta
    if isinstance(a, Cyclo) or isinstance(b, Cyclo):
        return SatakeClass(Cyclo.coerce(a).inverse(), Cyclo.coerce(b).inverse(), c.q)
    if a == 0 or b == 0:
        raise ValueError("zero Satake parameter has no contragredient")
    return SatakeClass(1 / a, 1 / b, c.q)


# --- local representation classes for the unitarity criterion ------------

SUPERCUSPIDAL_SELFDUAL = "supercuspidal-selfdual-trivial-central"
SUPERCUSPIDAL_S3 = "supercuspidal-S3-image"
DISCRETE_NONSUPERCUSPIDAL = "discrete-nonsupercuspidal"
PRINCIPAL_TEMPERED = "principal-tempered"
COMPLEMENTARY = "complementary"

_KINDS = (SUPERCUSPIDAL_SELFDUAL, SUPERCUSPIDAL_S3, DISCRETE_NONSUPERCUSPIDAL,
          PRINCIPAL_TEMPERED, COMPLEMENTARY)

PAIR_MU_MUINV = "mu-muinv"   # pi(mu, mu^{-1})
PAIR_ONE_MU = "one-mu"       # pi(1, mu)


@dataclass(frozen=True)
class LocalRepClass:
    """Tagged local representation, input data for the unitarity criterion.

    Supercuspidal / discrete kinds are pure tags (they are ramified, so not
    recoverable from Satake data).  Principal kinds carry the unitary
    character value mu and its finite-order flags.
    """

    kind: str
    mu: Optional[complex] = None
    r: Optional[float] = None
    pair_form: str = PAIR_MU_MUINV
    mu_cubed_is_one: Optional[bool] = None
    mu_is_order_two: Optional[bool] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == COMPLEMENTARY:
            if self.r is None or not 0 < self.r < 0.5:
                raise ValueError("complementary r must lie in (0, 1/2)")
        if self.kind in (PRINCIPAL_TEMPERED, COMPLEMENTARY):
            if self.mu is None:
                raise ValueError(f"{self.kind} requires mu")
            if abs(abs(_as_complex(self.mu)) - 1.0) > 1e-8:
                raise ValueError("|mu| must be 1")


def principal_tempered(mu, pair_form: str = PAIR_MU_MUINV,
                       tol: float = DEFAULT_TOL) -> LocalRepClass:
    """Principal tempered class with order flags computed from mu."""
    m = _as_complex(mu)
    return LocalRepClass(
        PRINCIPAL_TEMPERED, mu=mu, pair_form=pair_form,
        mu_cubed_is_one=abs(m ** 3 - 1) <= tol,
        mu_is_order_two=abs(m + 1) <= tol,
    )


def complementary_rep(mu, r: float) -> LocalRepClass:
    return LocalRepClass(COMPLEMENTARY, mu=mu, r=r)
