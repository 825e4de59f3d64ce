"""Unramified constant-term calculus and unitarity regions in the rs-plane.

The intertwining coefficient is computed two independent ways: as a per-root
product over the five roots inverted by the parabolic Weyl element, and as a
ratio of local L-values built in ``localfactor``.  The module's central
contract is that the two closed forms agree identically.

Convention note: the per-root factor is (1 - chi q^{-t-1}) / (1 - chi q^{-t})
with t the coroot pairing of the parameter weight, which is the orientation
whose poles (vanishing denominators) land exactly on the known reducibility
locus {mu = 1, s in {+-r, +-3r}} or {mu^2 = 1, s = 0}.  Matching the L-ratio
requires building it from the Satake class (mu q^{-r}, mu q^{r}) itself, not
its contragredient; both orientations were tried and this is the one that
agrees identically (see tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Set

from . import satake as sk
from .g2root import (POSITIVE_ROOTS, RootVector, coroot_decomposition,
                     lambda_weight, pairing)
from .localfactor import RepTag, local_factor

# roots inverted by the parabolic Weyl element, in product order
_GK_ROOTS = ("beta2", "beta3", "beta4", "beta5", "beta6")

POLE_TOL = 1e-10


@dataclass(frozen=True)
class PrincipalParams:
    """Unramified principal-series datum (mu, q, r, s)."""

    mu: complex
    q: int
    r: float
    s: complex

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be >= 2")
        if not 0 <= float(self.r) < 0.5:
            raise ValueError("r must lie in [0, 1/2)")
        if abs(abs(_mu_complex(self.mu)) - 1.0) > 1e-8:
            raise ValueError("|mu| must be 1")


class IntertwiningPole(ArithmeticError):
    """Raised when the assembled coefficient has a pole at the parameters."""

    def __init__(self, root_name: str, pairing_value):
        self.root_name = root_name
        self.pairing_value = pairing_value
        super().__init__(
            f"pole from root {root_name}: 1 - chi q^(-t) vanishes at t = {pairing_value}")


def _mu_complex(mu) -> complex:
    from .cyclo import Cyclo
    return mu.to_complex() if isinstance(mu, Cyclo) else complex(mu)


def torus_character_value(p: PrincipalParams, beta: RootVector) -> complex:
    """Value of the torus character on beta^vee: mu^c6 with beta^vee = c1 b1^vee + c6 b6^vee."""
    _, c6 = coroot_decomposition(beta)
    return _mu_complex(p.mu) ** c6


def _pairings_at(p: PrincipalParams):
    lam = lambda_weight()
    out = {}
    for name in _GK_ROOTS:
        form = pairing(lam, POSITIVE_ROOTS[name])
        out[name] = form(p.r, p.s)
    return out


def _exact_pole_root(p: PrincipalParams, ts) -> str:
    """An exact-arithmetic pole decision when (mu, r, s) are exact; None if pole-free.

    A denominator 1 - chi_b q^{-t_b} vanishes at real parameters exactly when
    chi_b = 1 and t_b = 0, both decidable without tolerances for a
    root-of-unity mu and rational r, s.
    """
    from .cyclo import Cyclo
    if not isinstance(p.mu, Cyclo):
        return None
    for name in _GK_ROOTS:
        t = ts[name]
        if not isinstance(t, (int, Fraction)):
            return None
        if t == 0:
            _, c6 = coroot_decomposition(POSITIVE_ROOTS[name])
            if p.mu ** c6 == 1:
                return name
    return None


def gk_coefficient(p: PrincipalParams, pole_tol: float = POLE_TOL) -> complex:
    """Per-root product of (1 - chi_b q^{-t_b - 1}) / (1 - chi_b q^{-t_b}).

    t_b runs over the coroot pairings of the parameter weight with the five
    inverted roots.  A vanishing denominator factor raises IntertwiningPole
    naming the offending root; with a root-of-unity mu and rational (r, s)
    the pole decision is exact, otherwise it uses pole_tol.
    """
    ts = _pairings_at(p)
    exact_pole = _exact_pole_root(p, ts)
    if exact_pole is not None:
        raise IntertwiningPole(exact_pole, ts[exact_pole])
    value = 1.0 + 0j
    for name in _GK_ROOTS:
        t = complex(ts[name])
        chi = torus_character_value(p, POSITIVE_ROOTS[name])
        den = 1.0 - chi * complex(p.q) ** (-t)
        if abs(den) < pole_tol:
            raise IntertwiningPole(name, ts[name])
        num = 1.0 - chi * complex(p.q) ** (-t - 1)
        value *= num / den
    return value


def l_ratio(p: PrincipalParams, pole_tol: float = POLE_TOL,
            _use_contragredient: bool = False) -> complex:
    """L(s,r30) L(2s,wedge2) / [L(1+s,r30) L(1+2s,wedge2)] at the class of p.

    The class used is (mu q^{-r}, mu q^{r}); the keyword flips to the
    contragredient and exists only so tests can pin the convention.
    """
    mu = _mu_complex(p.mu)
    qr = float(p.q) ** float(p.r)
    cls = sk.SatakeClass(mu / qr, mu * qr, p.q)
    if _use_contragredient:
        cls = sk.contragredient(cls)
    r30 = local_factor(RepTag.ADJOINT_CUBE, cls)
    w2 = local_factor(RepTag.WEDGE2, cls)
    s = complex(p.s)
    # L(s) = 1/P(q^{-s}); the assembled ratio is a quotient of P-values
    den = r30.evaluate(p.q ** (-s)) * w2.evaluate(p.q ** (-2 * s))
    if abs(den) < pole_tol:
        raise IntertwiningPole("numerator-L-value", p.s)
    num = r30.evaluate(p.q ** (-1 - s)) * w2.evaluate(p.q ** (-1 - 2 * s))
    return num / den


def principal_series_pole_set(mu_order, r) -> Set:
    """Real pole locus of the intertwining coefficient at complementary data.

    mu trivial: {+-r, +-3r, 0}; mu of exact order 2: {0}; otherwise empty.
    Exact Fractions in, exact Fractions out.
    """
    if not 0 <= float(r) < 0.5:
        raise ValueError("r must lie in [0, 1/2)")
    if mu_order == 1:
        vals = {r, -r, 3 * r, -3 * r, 0 * r}
        return {_canon_zero(v) for v in vals}
    if mu_order == 2:
        return {_canon_zero(0 * r)}
    return set()


def _canon_zero(v):
    return type(v)(0) if v == 0 else v


def gk_pole_set(mu_order, r) -> Set:
    """Pole locus re-derived root by root from the per-root product.

    For each inverted root, the denominator 1 - chi_b q^{-t_b} vanishes at a
    real s exactly when chi_b = 1 and t_b = 0; solving the affine pairing
    forms for s gives the locus.  Independent route used to cross-check
    principal_series_pole_set.
    """
    lam = lambda_weight()
    out = set()
    for name in _GK_ROOTS:
        beta = POSITIVE_ROOTS[name]
        _, c6 = coroot_decomposition(beta)
        if c6 % mu_order != 0:
            continue  # chi_b = mu^c6 != 1
        form = pairing(lam, beta)
        # form = const + rc*r + sc*s; solve for s at t = 0
        if form.s_coeff == 0:
            continue
        s_at = -(form.const + form.r_coeff * Fraction(r)) / form.s_coeff
        out.add(_canon_zero(s_at))
    return out


# --- unitarity of the degenerate-quotient family --------------------------

@dataclass(frozen=True)
class UnitarityCase:
    rep: sk.LocalRepClass
    s: float


def langlands_quotient_unitary(case: UnitarityCase) -> bool:
    """Unitarity of the quotient at tempered data and real s, case by case.

    Supercuspidal self-dual with trivial central character: 0 < s <= 1/2.
    Supercuspidal with S3 parameter image: 0 < s <= 1.
    Non-supercuspidal discrete series: 0 < s <= 1/2.
    pi(mu, mu^{-1}) with mu^3 != 1: 0 < s <= 1/2; with mu^3 = 1 also s = 1.
    pi(1, mu) with mu of order two: 0 < s <= 1.
    """
    rep, s = case.rep, float(case.s)
    if rep.kind == sk.COMPLEMENTARY:
        raise ValueError("complementary-series data: use region_membership")
    if rep.kind == sk.SUPERCUSPIDAL_SELFDUAL:
        return 0 < s <= 0.5
    if rep.kind == sk.SUPERCUSPIDAL_S3:
        return 0 < s <= 1
    if rep.kind == sk.DISCRETE_NONSUPERCUSPIDAL:
        return 0 < s <= 0.5
    if rep.kind == sk.PRINCIPAL_TEMPERED:
        if rep.pair_form == sk.PAIR_ONE_MU:
            if not rep.mu_is_order_two:
                raise ValueError("pi(1, mu) case requires mu of order two")
            return 0 < s <= 1
        if rep.mu_cubed_is_one:
            return 0 < s <= 0.5 or s == 1
        return 0 < s <= 0.5
    raise ValueError(f"unsupported kind {rep.kind!r}")


# --- rs-plane regions ------------------------------------------------------

UPPER = "upper-triangle"
LOWER = "lower-triangle"
BOUNDARY = "boundary"
OUTSIDE = "outside"

MU_TRIVIAL = "trivial"
MU_ORDER2 = "order2"

UPPER_VERTICES = ((Fraction(1, 6), Fraction(1, 2)),
                  (Fraction(1, 4), Fraction(3, 4)),
                  (Fraction(0), Fraction(1)))
LOWER_VERTICES = ((Fraction(0), Fraction(1, 2)),
                  (Fraction(1, 6), Fraction(1, 2)),
                  (Fraction(0), Fraction(0)))
FORBIDDEN_VERTICES = ((Fraction(0), Fraction(1)),
                      (Fraction(1, 6), Fraction(1, 2)),
                      (Fraction(0), Fraction(1, 2)))


def _sign_values(r, s):
    """The five edge forms, sign-exactly for rational input.

    Forms: s+3r-1, 1-(s+r), s-3r, r, 1/2-s; rational (r, s) are cleared to a
    common denominator so each entry is an integer with the right sign.
    """
    if isinstance(r, Rational) and isinstance(s, Rational):
        rn, rd = Fraction(r).numerator, Fraction(r).denominator
        sn, sd = Fraction(s).numerator, Fraction(s).denominator
        # common denominator rd*sd; numerators of r and s over it:
        R = rn * sd
        S = sn * rd
        D = rd * sd
        return {
            "a": S + 3 * R - D,      # s + 3r - 1
            "b": D - (S + R),        # 1 - (s + r)
            "d": S - 3 * R,          # s - 3r
            "r": R,                  # r
            "half": D - 2 * S,       # 1/2 - s  (scaled by 2)
        }
    rf, sf = float(r), float(s)
    return {
        "a": sf + 3 * rf - 1.0,
        "b": 1.0 - (sf + rf),
        "d": sf - 3 * rf,
        "r": rf,
        "half": 1.0 - 2.0 * sf,
    }


def region_membership(r, s, mu_case: str = MU_TRIVIAL) -> str:
    """Classify (r, s) against the unitary triangles of the rs-plane.

    Upper triangle (mu trivial only), open: s+3r > 1, s+r < 1, r > 0, s-3r > 0;
    vertices (1/6,1/2), (1/4,3/4), (0,1).  Lower triangle (both mu cases),
    open: r > 0, s < 1/2, s > 3r; vertices (0,1/2), (1/6,1/2), (0,0).
    Points on the edges of an applicable closed triangle classify as boundary.
    """
    if mu_case not in (MU_TRIVIAL, MU_ORDER2):
        raise ValueError("mu_case must be trivial or order2")
    v = _sign_values(r, s)
    a, b, d, rr, half = v["a"], v["b"], v["d"], v["r"], v["half"]

    if mu_case == MU_TRIVIAL:
        if a > 0 and b > 0 and d > 0 and rr > 0:
            return UPPER
    if rr > 0 and half > 0 and d > 0:
        return LOWER

    if mu_case == MU_TRIVIAL:
        # closed upper triangle: a >= 0, b >= 0, d >= 0 (r >= 0 follows)
        if a >= 0 and b >= 0 and d >= 0 and (a == 0 or b == 0 or d == 0):
            return BOUNDARY
    # closed lower triangle: r >= 0, s <= 1/2, s >= 3r
    if rr >= 0 and half >= 0 and d >= 0 and (rr == 0 or half == 0 or d == 0):
        return BOUNDARY
    return OUTSIDE


def forbidden_triangle_contains(r, s) -> bool:
    """Strict interior of the triangle (0,1), (1/6,1/2), (0,1/2).

    Its inside meets no unitary region: edges r = 0, s = 1/2 shifted, and the
    line s = 1 - 3r shared with the upper triangle, so the two are disjoint.
    """
    v = _sign_values(r, s)
    return v["r"] > 0 and v["half"] < 0 and v["a"] < 0
