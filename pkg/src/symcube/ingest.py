"""Parsers for coefficient tables, Hecke-character data, and AFE configs.

Coefficient files carry integer Fourier coefficients in arithmetic
normalization; integers are parsed exactly and only converted to floats when
Satake classes are built.  A built-in q-expansion of the weight-12 level-1
cusp form (eta^24) supplies test data without external downloads.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, List, Optional

from .analytic import AFEConfig
from .cyclo import Cyclo
from .monomial import INERT, SPLIT, HeckeLocalData
from .satake import SatakeClass, satake_from_hecke

try:
    from gmpy2 import mpz as _mpz
except ImportError:          # pragma: no cover - gmpy2 is a declared dependency
    _mpz = int


class FormParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class MultiplicativityError(FormParseError):
    def __init__(self, m: int, n: int):
        self.pair = (m, n)
        ValueError.__init__(
            self, f"multiplicativity fails at coprime pair ({m}, {n}): "
                  f"a({m * n}) != a({m})*a({n})")


class HeckeParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass
class ParsedForm:
    weight: int
    level: int
    coefficients: Dict[int, int]
    source_path: str = ""

    @property
    def n_max(self) -> int:
        return max(self.coefficients) if self.coefficients else 0

    def a(self, n: int):
        return self.coefficients[n]


def _audit_multiplicativity(coeffs: Dict[int, object], seed: int = 20121) -> None:
    """a(mn) = a(m) a(n) on all small coprime pairs plus 50 seeded larger ones."""
    nmax = max(coeffs)
    pairs = set()
    for m in range(2, 32):
        for n in range(m + 1, max(m + 2, 1000 // m + 1)):
            if m * n <= nmax and math.gcd(m, n) == 1:
                pairs.add((m, n))
    rng = random.Random(seed)
    extra, attempts = 0, 0
    while extra < 50 and attempts < 2000 and nmax > 6:
        attempts += 1
        m = rng.randrange(2, max(3, int(nmax ** 0.5) + 1))
        n = rng.randrange(2, max(3, nmax // m + 1))
        if math.gcd(m, n) != 1 or m * n > nmax:
            continue
        pair = tuple(sorted((m, n)))
        if pair not in pairs:
            pairs.add(pair)
            extra += 1
    for m, n in sorted(pairs):
        if m in coeffs and n in coeffs and m * n in coeffs:
            lhs, rhs = coeffs[m * n], coeffs[m] * coeffs[n]
            if isinstance(lhs, float) or isinstance(rhs, float):
                if not math.isclose(lhs, rhs, rel_tol=1e-9, abs_tol=1e-9):
                    raise MultiplicativityError(m, n)
            elif lhs != rhs:
                raise MultiplicativityError(m, n)


def parse_form(path: str) -> ParsedForm:
    """Read and validate a coefficient file.

    Grammar: header ``weight k level N character trivial`` then ascending
    ``n a_n`` lines.  Validation: a_1 = 1 and the multiplicativity audit.
    """
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].strip():
        raise FormParseError(1, "empty file; expected header "
                                "'weight k level N character trivial'")
    head = lines[0].split()
    if len(head) != 6 or head[0] != "weight" or head[2] != "level" or head[4] != "character":
        raise FormParseError(1, f"malformed header {lines[0]!r}")
    try:
        weight, level = int(head[1]), int(head[3])
    except ValueError:
        raise FormParseError(1, "weight and level must be integers") from None
    if head[5] != "trivial":
        raise FormParseError(1, "only character trivial is accepted")
    coeffs: Dict[int, int] = {}
    prev = 0
    for i, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        bits = raw.split()
        if len(bits) != 2:
            raise FormParseError(i, f"expected 'n a_n', got {raw!r}")
        try:
            n = int(bits[0])
            a = int(bits[1]) if "." not in bits[1] else float(bits[1])
        except ValueError:
            raise FormParseError(i, f"bad number in {raw!r}") from None
        if n <= prev:
            raise FormParseError(i, f"indices must ascend; saw {n} after {prev}")
        prev = n
        coeffs[n] = a
    if coeffs.get(1) != 1:
        raise FormParseError(1, "a_1 must be 1 (normalized eigenform)")
    _audit_multiplicativity(coeffs)
    return ParsedForm(weight, level, coeffs, source_path=path)


def serialize_form(form: ParsedForm) -> str:
    out = [f"weight {form.weight} level {form.level} character trivial"]
    for n in sorted(form.coefficients):
        out.append(f"{n} {form.coefficients[n]}")
    return "\n".join(out) + "\n"


@dataclass
class ParsedHeckeData:
    entries: List[HeckeLocalData]
    chi_order: Optional[int] = None
    field_disc: Optional[int] = None

    def exact(self) -> bool:
        return all(e.is_exact() for e in self.entries)


def _parse_char_value(token: str, line: int):
    """Either exact root-of-unity shorthand 'k/n' or a 're,im' pair."""
    if "," in token:
        re_s, im_s = token.split(",", 1)
        try:
            return complex(float(re_s), float(im_s))
        except ValueError:
            raise HeckeParseError(line, f"bad re,im value {token!r}") from None
    if "/" in token:
        try:
            k_s, n_s = token.split("/", 1)
            return Cyclo.root_of_unity(int(k_s), int(n_s))
        except (ValueError, ZeroDivisionError):
            raise HeckeParseError(line, f"bad root-of-unity shorthand {token!r}") from None
    raise HeckeParseError(line, f"character value {token!r} is neither k/n nor re,im")


def parse_hecke(path: str) -> ParsedHeckeData:
    """Read quadratic-field Hecke character data.

    Grammar: header ``field-disc D chi-order n`` (n may be ``unknown``), then
    lines ``p split v v`` or ``p inert v`` where v is ``k/n`` or ``re,im``.
    """
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].strip():
        raise HeckeParseError(1, "empty file; expected header 'field-disc D chi-order n'")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "field-disc" or head[2] != "chi-order":
        raise HeckeParseError(1, f"malformed header {lines[0]!r}")
    try:
        disc = int(head[1])
    except ValueError:
        raise HeckeParseError(1, "field-disc must be an integer") from None
    order = None if head[3] == "unknown" else int(head[3])
    entries, seen = [], set()
    for i, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        bits = raw.split()
        if len(bits) < 3:
            raise HeckeParseError(i, f"expected 'p split v v' or 'p inert v', got {raw!r}")
        try:
            p = int(bits[0])
        except ValueError:
            raise HeckeParseError(i, f"bad prime {bits[0]!r}") from None
        if p in seen:
            raise HeckeParseError(i, f"duplicate prime {p}")
        seen.add(p)
        kind = bits[1]
        if kind == "split":
            if len(bits) != 4:
                raise HeckeParseError(i, f"split entry at p={p} needs two values")
            v1 = _parse_char_value(bits[2], i)
            v2 = _parse_char_value(bits[3], i)
            # the exact path needs both values exact; mixed entries demote
            if isinstance(v1, Cyclo) != isinstance(v2, Cyclo):
                v1 = v1.to_complex() if isinstance(v1, Cyclo) else v1
                v2 = v2.to_complex() if isinstance(v2, Cyclo) else v2
            entry = HeckeLocalData(p, SPLIT, v1, v2)
        elif kind == "inert":
            if len(bits) != 3:
                raise HeckeParseError(i, f"inert entry at p={p} needs one value")
            entry = HeckeLocalData(p, INERT, _parse_char_value(bits[2], i))
        else:
            raise HeckeParseError(i, f"splitting must be split or inert, got {kind!r}")
        if order is not None:
            for v in (entry.chi_p, entry.chi_pbar):
                if v is None:
                    continue
                if abs(abs(v if isinstance(v, complex) else v.to_complex()) - 1.0) > 1e-9:
                    raise HeckeParseError(i, f"value at p={p} is not a unit "
                                             f"but chi-order is finite")
        entries.append(entry)
    return ParsedHeckeData(entries, chi_order=order, field_disc=disc)


def serialize_hecke(data: ParsedHeckeData) -> str:
    def fmt(v):
        if isinstance(v, Cyclo):
            (e, c), = v.terms.items()
            return f"{e.numerator}/{e.denominator}" if e.denominator > 1 else f"{e.numerator}/1"
        return f"{v.real},{v.imag}"
    head = f"field-disc {self_or(data.field_disc, 0)} chi-order " \
           f"{data.chi_order if data.chi_order is not None else 'unknown'}"
    out = [head]
    for e in data.entries:
        if e.splitting == SPLIT:
            out.append(f"{e.p} split {fmt(e.chi_p)} {fmt(e.chi_pbar)}")
        else:
            out.append(f"{e.p} inert {fmt(e.chi_p)}")
    return "\n".join(out) + "\n"


def self_or(v, default):
    return default if v is None else v


def parse_afe_config(path: str) -> AFEConfig:
    """key = value lines: gamma_shifts, conductor, cutoff, self_dual, x_scale."""
    values = {}
    with open(path) as fh:
        for i, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"config line {i}: expected key = value, got {raw!r}")
            key, _, val = line.partition("=")
            values[key.strip()] = val.strip()
    if "gamma_shifts" not in values:
        raise ValueError("config must set gamma_shifts")
    shifts = tuple(float(x) for x in values["gamma_shifts"].split(","))
    degree = int(values.get("degree", 2 * len(shifts)))
    return AFEConfig(
        degree=degree,
        gamma_shifts=shifts,
        conductor=int(values.get("conductor", 1)),
        self_dual=values.get("self_dual", "true").lower() in ("true", "1", "yes"),
        cutoff=int(values.get("cutoff", 0)),
        x_scale=float(values.get("x_scale", 16.0)),
    )


# --- built-in q-expansion oracle ------------------------------------------

def _square_packed(coeffs: List[int], nkeep: int) -> List[int]:
    """Square an integer polynomial exactly via Kronecker substitution."""
    n = len(coeffs)
    m = max(abs(x) for x in coeffs) or 1
    slot_bytes = ((n * m * m).bit_length() + 2 + 7) // 8
    bits = slot_bytes * 8
    half = 1 << (bits - 1)
    pos = bytearray(n * slot_bytes)
    neg = bytearray(n * slot_bytes)
    for i, c in enumerate(coeffs):
        if c > 0:
            pos[i * slot_bytes:(i + 1) * slot_bytes] = c.to_bytes(slot_bytes, "little")
        elif c < 0:
            neg[i * slot_bytes:(i + 1) * slot_bytes] = (-c).to_bytes(slot_bytes, "little")
    z = _mpz(int.from_bytes(bytes(pos), "little")) - _mpz(int.from_bytes(bytes(neg), "little"))
    z = z * z
    # shift every base-2^bits digit by half so all digits are nonnegative;
    # |true coefficient| < half - 1, so no carries are introduced
    z += _mpz(int.from_bytes(bytes(half.to_bytes(slot_bytes, "little") * nkeep), "little"))
    z &= (_mpz(1) << (bits * nkeep)) - 1
    raw = int(z).to_bytes(nkeep * slot_bytes, "little")
    return [int.from_bytes(raw[i * slot_bytes:(i + 1) * slot_bytes], "little") - half
            for i in range(nkeep)]


def eta24_qexpansion(n_max: int) -> List[int]:
    """Coefficients a(0..n_max) of q prod_k (1-q^k)^24, exactly.

    Built by squaring the cube of the Euler product three times; the cube is
    the sparse series sum_k (-1)^k (2k+1) q^{k(k+1)/2}.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    n = n_max  # coefficients of (eta-product)^24 up to q^{n-1}, then shift by 1
    cube = []
    k = 0
    while k * (k + 1) // 2 < n:
        cube.append((k * (k + 1) // 2, (-1) ** k * (2 * k + 1)))
        k += 1
    sixth = [0] * n
    for e1, c1 in cube:
        for e2, c2 in cube:
            e = e1 + e2
            if e >= n:
                break
            sixth[e] += c1 * c2
    twelfth = _square_packed(sixth, n)
    full = _square_packed(twelfth, n)
    return [0] + full[:n_max]


def delta_form(n_max: int) -> ParsedForm:
    """Built-in sample: the weight-12 level-1 eigenform, coefficients to n_max."""
    a = eta24_qexpansion(n_max)
    return ParsedForm(12, 1, {i: a[i] for i in range(1, n_max + 1)},
                      source_path=f"builtin:delta:{n_max}")


def satake_table(form: ParsedForm) -> Dict[int, SatakeClass]:
    """Satake classes at all good primes in the parsed range.

    Primes dividing the level are the ramified set and are skipped.
    """
    from .analytic import primes_upto

    out = {}
    for p in primes_upto(form.n_max):
        if form.level % p == 0:
            continue
        if p not in form.coefficients:
            continue
        out[p] = satake_from_hecke(form.coefficients[p], p, form.weight, 1.0)
    return out
