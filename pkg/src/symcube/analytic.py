"""Global numerics: Dirichlet coefficients, partial Euler products, and a
smoothed evaluator for completed L-functions.

The completed-value machinery evaluates

    F(s) = sum_n lambda(n) n^{-s} V_s(n / X),
    V_s(y) = (1/2 pi i) int_(c) gamma(s+u) y^{-u} du / u,

with gamma the product of Gamma_C factors (times conductor^{s/2}).  The
contour-shift identity gives  Lambda(s) = F(s) + eps * (reflected sum whose
terms carry weights V(nX)),  and the reflection-suppression scale X (default
16) pushes every reflected term below 1e-20, so F(s) computes the completed
value throughout the critical strip without knowing the root number.  The
root-number probe then reads eps off as Lambda(s)/Lambda(1-s); a wrong gamma
configuration destroys the constancy of that ratio, which is the negative
control validating the shipped configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.special import loggamma

from .localfactor import RepTag, ReciprocalPoly

LOG_2PI = math.log(2.0 * math.pi)


def primes_upto(n: int) -> List[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.nonzero(sieve)[0].tolist()


class MissingPrimeError(KeyError):
    def __init__(self, p: int):
        self.p = p
        super().__init__(f"no local factor supplied for prime {p}")


@dataclass
class CoefficientTable:
    """Multiplicative coefficients lambda(n), n <= n_max, from local factors."""

    values: np.ndarray           # complex, index 0 unused, values[1] = 1
    rep_tag: Optional[RepTag] = None
    source: str = ""

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def lam(self, n: int) -> complex:
        return complex(self.values[n])

    def is_real(self, tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.values[1:].imag)) <= tol)


def dirichlet_coeffs(local_factors: Dict[int, ReciprocalPoly], N: int,
                     ramified: Iterable[int] = (), rep_tag: Optional[RepTag] = None,
                     source: str = "") -> CoefficientTable:
    """Expand an Euler product into Dirichlet coefficients up to N.

    lambda(p^k) follows the linear recurrence of the local polynomial,
    lambda is extended multiplicatively, and ramified primes contribute the
    factor 1 (all their prime-power coefficients vanish).
    """
    ramified = set(ramified)
    lam = np.zeros(N + 1, dtype=np.complex128)
    lam[1] = 1.0
    plist = primes_upto(N)
    spf = np.zeros(N + 1, dtype=np.int64)
    for p in plist:
        sel = spf[p::p]
        sel[sel == 0] = p
        spf[p::p] = sel
    for p in plist:
        if p in ramified:
            continue
        if p not in local_factors:
            raise MissingPrimeError(p)
        poly = local_factors[p].to_complex()
        c = poly.coeffs
        d = poly.degree
        vals = {0: 1.0 + 0j}
        k, pk = 1, p
        while pk <= N:
            v = 0j
            for j in range(1, min(k, d) + 1):
                v -= c[j] * vals[k - j]
            vals[k] = v
            lam[pk] = v
            k += 1
            pk *= p
    # multiplicative extension along smallest prime factors
    for n in range(2, N + 1):
        p = int(spf[n])
        m, pk = n, 1
        while m % p == 0:
            m //= p
            pk *= p
        if m > 1:
            lam[n] = lam[pk] * lam[m]
    return CoefficientTable(lam, rep_tag=rep_tag, source=source)


@dataclass
class PartialProductTrace:
    value: complex
    checkpoints: List[Tuple[int, complex]]
    outside_convergence: bool = False


class LocalPoleError(ArithmeticError):
    def __init__(self, p: int, s: complex):
        self.p, self.s = p, s
        super().__init__(f"local factor at p={p} has a pole at s={s}")


def partial_L(s: complex, X: int, local_factors: Dict[int, ReciprocalPoly],
              ramified: Iterable[int] = ()) -> PartialProductTrace:
    """prod_{p <= X} 1/P_p(p^{-s}) with compensated log-space accumulation.

    Checkpoints record the running product each time the prime bound doubles.
    Evaluation with Re(s) <= 1 is permitted but flagged as outside the
    absolute-convergence contract.
    """
    ramified = set(ramified)
    total = 0j
    comp = 0j   # Kahan compensation
    checkpoints = []
    next_mark = 2
    for p in primes_upto(X):
        if p in ramified:
            continue
        if p not in local_factors:
            raise MissingPrimeError(p)
        while p > next_mark:
            checkpoints.append((next_mark, np.exp(total)))
            next_mark *= 2
        val = local_factors[p].to_complex().evaluate(p ** (-s))
        if abs(val) < 1e-12:
            raise LocalPoleError(p, s)
        term = -np.log(val) - comp
        t = total + term
        comp = (t - total) - term
        total = t
    value = np.exp(total)
    checkpoints.append((X, value))
    return PartialProductTrace(complex(value), checkpoints,
                               outside_convergence=(complex(s).real <= 1.0))


def dirichlet_sum(s: complex, coeffs: CoefficientTable, N: Optional[int] = None) -> complex:
    """Plain truncated Dirichlet series, the cross-check partner of partial_L."""
    N = coeffs.n_max if N is None else min(N, coeffs.n_max)
    n = np.arange(1, N + 1, dtype=np.float64)
    return complex(np.sum(coeffs.values[1:N + 1] * n ** (-complex(s))))


# --- smoothed completed-value machinery -----------------------------------

@dataclass(frozen=True)
class AFEConfig:
    """Archimedean data and evaluation parameters for a completed L-function.

    x_scale controls how far the smoothed sum is unbalanced: reflected terms
    carry weights V(n * x_scale), which the kernel decay pushes below 1e-20
    for degree <= 4 at the default.  Higher degrees decay more slowly and
    need a larger x_scale (with a correspondingly larger cutoff).
    """

    degree: int
    gamma_shifts: Tuple[float, ...]
    conductor: int = 1
    self_dual: bool = True
    cutoff: int = 0               # 0 = derive from the analytic conductor
    x_scale: float = 16.0         # reflection-suppression scale

    def __post_init__(self):
        if not self.gamma_shifts:
            raise ValueError("gamma_shifts must be nonempty")
        if self.degree != 2 * len(self.gamma_shifts):
            raise ValueError("degree must equal 2 x number of Gamma_C factors")
        object.__setattr__(self, "gamma_shifts", tuple(float(k) for k in self.gamma_shifts))


def delta_sym3_config(cutoff: int = 4000) -> AFEConfig:
    """Shipped configuration for the symmetric cube of the weight-12 level-1 form."""
    return AFEConfig(degree=4, gamma_shifts=(5.5, 16.5), conductor=1,
                     self_dual=True, cutoff=cutoff)


def gamma_completed(s: complex, cfg: AFEConfig) -> complex:
    """conductor^{s/2} * prod_j Gamma_C(s + kappa_j), Gamma_C(w) = 2 (2pi)^{-w} Gamma(w)."""
    lg = 0.5 * complex(s) * math.log(cfg.conductor)
    for k in cfg.gamma_shifts:
        w = complex(s) + k
        lg += math.log(2.0) - w * LOG_2PI + loggamma(w)
    return complex(np.exp(lg))


def analytic_conductor(s: complex, cfg: AFEConfig) -> float:
    out = float(cfg.conductor)
    for k in cfg.gamma_shifts:
        out *= abs((complex(s) + k) / (2 * math.pi)) ** 2
    return out


def default_cutoff(s: complex, cfg: AFEConfig) -> int:
    base = math.ceil(10.0 * math.sqrt(analytic_conductor(s, cfg)))
    return max(64, int(base * cfg.x_scale))


# quadrature for the vertical-line kernel: contour Re(u) = _CONTOUR,
# trapezoid step _STEP, truncation at +-_VMAX; the integrand decays like the
# Gamma_C product, i.e. faster than e^{-pi |v|} for degree >= 4
_CONTOUR = 2.5
_STEP = 0.125
_VMAX = 40.0


def _kernel_nodes(s: complex, cfg: AFEConfig):
    v = np.arange(-_VMAX, _VMAX + _STEP / 2, _STEP)
    u = _CONTOUR + 1j * v
    lg = 0.5 * (complex(s) + u) * math.log(cfg.conductor)
    for k in cfg.gamma_shifts:
        w = complex(s) + u + k
        lg = lg + math.log(2.0) - w * LOG_2PI + loggamma(w)
    weights = np.exp(lg) / u * (_STEP / (2 * math.pi))
    return u, weights


class CutoffTooSmall(ValueError):
    def __init__(self, needed: int, given: int):
        self.needed, self.given = needed, given
        super().__init__(
            f"cutoff {given} too small for target accuracy; need about {needed}")


def smoothing_weights(s: complex, y: np.ndarray, cfg: AFEConfig) -> np.ndarray:
    """V_s(y) on an array of positive y, via the shared quadrature grid."""
    u, w = _kernel_nodes(s, cfg)
    out = np.empty(len(y), dtype=np.complex128)
    logy = np.log(np.asarray(y, dtype=np.float64))
    block = 2048
    for i in range(0, len(y), block):
        out[i:i + block] = np.exp(-np.outer(logy[i:i + block], u)) @ w
    return out


def afe_value(s: complex, cfg: AFEConfig, coeffs: CoefficientTable) -> complex:
    """Completed value Lambda(s), up to a reflected term below 1e-20.

    Supported for Re(s) > 1 - _CONTOUR + 0.05 (the contour must stay inside
    the region of absolute convergence of the shifted series).  Raises
    CutoffTooSmall when the tail of the smoothed sum is not yet negligible.
    """
    s = complex(s)
    if s.real + _CONTOUR <= 1.05:
        raise ValueError(f"Re(s) = {s.real} below the supported strip")
    if abs(s.imag) > 20:
        raise ValueError("quadrature grid supports |Im(s)| <= 20; "
                         "recenter the contour for higher points")
    cutoff = cfg.cutoff or default_cutoff(s, cfg)
    if coeffs.n_max < cutoff:
        raise CutoffTooSmall(cutoff, coeffs.n_max)
    n = np.arange(1, cutoff + 1, dtype=np.float64)
    V = smoothing_weights(s, n / cfg.x_scale, cfg)
    terms = coeffs.values[1:cutoff + 1] * n ** (-s) * V
    total = complex(np.sum(terms))
    tail = float(np.sum(np.abs(terms[-16:])))
    scale = abs(gamma_completed(s, cfg))
    if tail > 1e-9 * max(abs(total), scale):
        raise CutoffTooSmall(cutoff * 2, cutoff)
    return total


@dataclass
class EpsilonReport:
    points: List[complex]
    estimates: List[complex]
    max_pairwise_deviation: float
    modulus_deviation: float
    skipped: List[complex] = field(default_factory=list)


def epsilon_probe(points: Sequence[complex], cfg: AFEConfig,
                  coeffs: CoefficientTable) -> EpsilonReport:
    """Estimate the root number as Lambda(s)/Lambda(1-s) at each point.

    Constancy across points and |eps| = 1 validate the gamma configuration;
    points where Lambda(1-s) sits below the noise floor are skipped.
    """
    if not cfg.self_dual:
        raise ValueError("root-number probe requires self-dual data")
    used, estimates, skipped = [], [], []
    for s in points:
        num = afe_value(s, cfg, coeffs)
        den = afe_value(1 - complex(s), cfg, coeffs)
        floor = 1e-13 * abs(gamma_completed(s, cfg))
        if abs(den) < floor:
            skipped.append(complex(s))
            continue
        used.append(complex(s))
        estimates.append(num / den)
    if not estimates:
        return EpsilonReport([], [], math.inf, math.inf, skipped)
    dev = max((abs(a - b) for a in estimates for b in estimates), default=0.0)
    mdev = max(abs(abs(e) - 1.0) for e in estimates)
    return EpsilonReport(used, estimates, dev, mdev, skipped)


VERDICT_CONSISTENT = "consistent-with-holomorphy"
VERDICT_FLAGGED = "growth-flagged"


@dataclass
class PoleScanReport:
    grid: List[float]
    values: List[complex]
    normalized: List[float]       # |Lambda(sigma) / gamma(sigma)|
    max_normalized: float
    threshold: float
    verdict: str
    flagged_points: List[float]


def pole_scan(interval: Tuple[float, float], grid: int, cfg: AFEConfig,
              coeffs: CoefficientTable, threshold: float = 3.0) -> PoleScanReport:
    """Evaluate the completed function on a real grid and judge boundedness.

    This is a consistency check, not a proof: the verdict reports whether the
    gamma-normalized values stay below the configured threshold.  An Euler
    factor with a pole in the interval inflates them well past it.
    """
    a, b = float(interval[0]), float(interval[1])
    if grid < 1 or (grid < 2 and a != b):
        raise ValueError("grid must have at least 2 points on a real interval")
    sigmas = [a] if a == b else [a + (b - a) * i / (grid - 1) for i in range(grid)]
    values, normalized, flagged = [], [], []
    for sg in sigmas:
        val = afe_value(sg, cfg, coeffs)
        norm = abs(val) / abs(gamma_completed(sg, cfg))
        values.append(val)
        normalized.append(norm)
        if norm > threshold:
            flagged.append(sg)
    mx = max(normalized)
    verdict = VERDICT_FLAGGED if flagged else VERDICT_CONSISTENT
    return PoleScanReport(sigmas, values, normalized, mx, threshold, verdict, flagged)


def inject_pole_factor(coeffs: CoefficientTable, p: int, sigma0: float) -> CoefficientTable:
    """Multiply the Dirichlet series by (1 - p^{sigma0 - s})^{-1}.

    Negative-control helper: the product acquires a pole at s = sigma0, which
    pole_scan must flag.
    """
    N = coeffs.n_max
    lam = coeffs.values.copy()
    w = float(p) ** float(sigma0)
    k, pk = 1, p
    while pk <= N:
        idx = np.arange(pk, N + 1, pk)
        lam[idx] += (w ** k) * coeffs.values[idx // pk]
        k += 1
        pk *= p
    return CoefficientTable(lam, rep_tag=coeffs.rep_tag,
                            source=coeffs.source + f"+pole(p={p},sigma={sigma0})")
