import cmath
import math
import random
from fractions import Fraction as Q

import pytest

from symcube.cyclo import Cyclo
from symcube.localfactor import RepTag, local_factor, poly_from_eigenvalues
from symcube.monomial import (
    ENTIRE, HAS_POLE, INERT, SPLIT, HeckeLocalData, adjointcube_char_poly,
    check_monomial_r3, check_monomial_r30, hecke_factor, induced_local,
    pole_criterion, sym_cube_matrix, symcube_char_poly)
from symcube.satake import SatakeClass


def test_induced_split_diagonal():
    d = HeckeLocalData(7, SPLIT, 1.0 + 0j, 1.0 + 0j)
    m = induced_local(d).frobenius
    assert m[0][0] == 1 and m[1][1] == 1 and m[0][1] == 0 and m[1][0] == 0


def test_induced_inert_structure():
    d = HeckeLocalData(11, INERT, 1.0 + 0j)
    cls = induced_local(d)
    m = cls.frobenius
    assert m[0][0] == 0 and m[1][1] == 0 and m[0][1] == 1 and m[1][0] == 1
    assert abs(cls.determinant() + 1.0) < 1e-15   # det = -chi
    # eigenvalues of [[0,1],[1,0]] are +-1
    import numpy as np
    ev = np.linalg.eigvals(np.array(m, dtype=complex))
    assert sorted(e.real for e in ev) == pytest.approx([-1.0, 1.0])


def test_induced_inert_square_is_chi_times_identity():
    c = Cyclo.root_of_unity(2, 7)
    d = HeckeLocalData(13, INERT, c)
    m = induced_local(d).frobenius
    sq = [[sum(m[i][k] * m[k][j] for k in range(2)) for j in range(2)]
          for i in range(2)]
    assert sq[0][0] == c and sq[1][1] == c
    assert not sq[0][1] and not sq[1][0]


def test_induced_validation():
    with pytest.raises(ValueError):
        HeckeLocalData(7, SPLIT, 1.0)                  # missing second value
    with pytest.raises(ValueError):
        HeckeLocalData(7, INERT, 1.0, 1.0)             # extra value
    with pytest.raises(ValueError):
        HeckeLocalData(7, "ramified", 1.0)
    with pytest.raises(ValueError):
        HeckeLocalData(7, INERT, 0.0)


def test_sym_cube_matrix_diagonal_case():
    a, b = 2.0 + 0j, -0.5 + 0j
    m = ((a, 0j), (0j, b))
    n = sym_cube_matrix(m)
    diag = [n[i][i] for i in range(4)]
    assert diag == [a ** 3, a * a * b, a * b * b, b ** 3]
    off = [n[i][j] for i in range(4) for j in range(4) if i != j]
    assert all(abs(x) < 1e-15 for x in off)


def test_symcube_char_poly_matches_local_factor():
    rng = random.Random(12)
    for _ in range(20):
        a = cmath.exp(2j * math.pi * rng.random()) * rng.uniform(0.5, 2.0)
        b = cmath.exp(2j * math.pi * rng.random()) * rng.uniform(0.5, 2.0)
        got = symcube_char_poly(((a, 0j), (0j, b)))
        want = local_factor(RepTag.SYM3, SatakeClass(a, b, 2))
        assert got.max_coeff_diff(want) < 1e-13


def test_symcube_char_poly_identity_matrix():
    got = symcube_char_poly(((1.0 + 0j, 0j), (0j, 1.0 + 0j)))
    want = poly_from_eigenvalues([1.0] * 4)           # (1-T)^4
    assert max(abs(x - y) for x, y in zip(got.coeffs, want)) < 1e-14


def test_symcube_inert_is_poly_in_t_squared():
    # 4x4 determinant oracle: [[0,c],[1,0]] must give (1 - c^3 T^2)^2
    c = Cyclo.root_of_unity(3, 7)
    poly = symcube_char_poly(induced_local(HeckeLocalData(5, INERT, c)).frobenius)
    c3 = c ** 3
    want = [Cyclo.one(), Cyclo.zero(), -2 * c3, Cyclo.zero(), c3 * c3]
    assert list(poly.coeffs) == want


def test_adjointcube_inert_poly():
    # [[0,c],[1,0]] twisted by det^{-1} gives (1 - c T^2)^2
    c = Cyclo.root_of_unity(1, 5)
    poly = adjointcube_char_poly(induced_local(HeckeLocalData(7, INERT, c)).frobenius)
    want = [Cyclo.one(), Cyclo.zero(), -2 * c, Cyclo.zero(), c * c]
    assert list(poly.coeffs) == want


def test_adjointcube_diag_matches_local_factor():
    rng = random.Random(13)
    for _ in range(10):
        a = cmath.exp(2j * math.pi * rng.random())
        b = cmath.exp(2j * math.pi * rng.random())
        got = adjointcube_char_poly(((a, 0j), (0j, b)))
        want = local_factor(RepTag.ADJOINT_CUBE, SatakeClass(a, b, 3))
        assert got.max_coeff_diff(want) < 1e-13
    with pytest.raises(ValueError):
        adjointcube_char_poly(((1.0, 1.0), (1.0, 1.0)))


def test_hecke_factor_split_cube_roots():
    d = HeckeLocalData(7, SPLIT, Cyclo.root_of_unity(1, 3), Cyclo.root_of_unity(2, 3))
    poly = hecke_factor(d, (3, 0))                    # chi^3 = 1 at both primes
    want = poly_from_eigenvalues([Cyclo.one(), Cyclo.one()])
    assert list(poly.coeffs) == want


def test_hecke_factor_inert_examples():
    d = HeckeLocalData(11, INERT, Cyclo.one())
    poly = hecke_factor(d, (2, 1))
    assert list(poly.coeffs) == [Cyclo.one(), Cyclo.zero(), -Cyclo.one()]  # 1 - T^2


def test_hecke_factor_split_i():
    d = HeckeLocalData(5, SPLIT, 1j, -1j)
    poly = hecke_factor(d, (1, 0))                    # (1-iT)(1+iT) = 1+T^2
    assert abs(poly.coeffs[1]) < 1e-15 and abs(poly.coeffs[2] - 1) < 1e-15


def test_monomial_r3_examples():
    d = HeckeLocalData(7, SPLIT, Cyclo.root_of_unity(1, 3), Cyclo.root_of_unity(-1, 3))
    assert check_monomial_r3(d) == 0.0
    d = HeckeLocalData(11, INERT, Cyclo.root_of_unity(2, 9))
    assert check_monomial_r3(d) == 0.0
    d = HeckeLocalData(13, SPLIT, Cyclo.one(), Cyclo.one())
    assert check_monomial_r3(d) == 0.0


def test_monomial_r30_examples():
    d = HeckeLocalData(7, SPLIT, Cyclo.one(), Cyclo.one())
    assert check_monomial_r30(d) == 0.0
    d = HeckeLocalData(11, INERT, Cyclo.root_of_unity(1, 6))
    assert check_monomial_r30(d) == 0.0
    d = HeckeLocalData(13, SPLIT, Cyclo.root_of_unity(1, 5), Cyclo.root_of_unity(3, 5))
    assert check_monomial_r30(d) == 0.0


def test_monomial_checks_random_roots_of_unity():
    rng = random.Random(55)
    for _ in range(50):
        n = rng.choice([2, 3, 4, 5, 6, 7, 8, 9, 12])
        p = rng.choice([3, 5, 7, 11, 13])
        if rng.random() < 0.5:
            d = HeckeLocalData(p, SPLIT,
                               Cyclo.root_of_unity(rng.randrange(n), n),
                               Cyclo.root_of_unity(rng.randrange(n), n))
        else:
            d = HeckeLocalData(p, INERT, Cyclo.root_of_unity(rng.randrange(n), n))
        assert check_monomial_r3(d) == 0.0
        assert check_monomial_r30(d) == 0.0


def test_monomial_checks_float_mode():
    rng = random.Random(56)
    for _ in range(50):
        phase = cmath.exp(2j * math.pi * rng.random())
        phase2 = cmath.exp(2j * math.pi * rng.random())
        if rng.random() < 0.5:
            d = HeckeLocalData(7, SPLIT, phase, phase2)
        else:
            d = HeckeLocalData(7, INERT, phase)
        assert check_monomial_r3(d) < 1e-12
        assert check_monomial_r30(d) < 1e-12


def test_split_induced_equals_direct_sym3_exactly():
    rng = random.Random(58)
    for _ in range(20):
        n = rng.choice([3, 4, 5, 7, 12])
        v1 = Cyclo.root_of_unity(rng.randrange(n), n)
        v2 = Cyclo.root_of_unity(rng.randrange(n), n)
        d = HeckeLocalData(7, SPLIT, v1, v2)
        got = symcube_char_poly(induced_local(d).frobenius)
        want = local_factor(RepTag.SYM3, SatakeClass(v1, v2, 7))
        assert got.max_coeff_diff(want) == 0.0


def test_inert_chi_cubed_equals_chi2_chiprime():
    # the conjugate fixes inert primes, so (2,1) and (3,0) give equal factors
    rng = random.Random(57)
    for _ in range(20):
        n = rng.choice([3, 5, 7, 8])
        d = HeckeLocalData(11, INERT, Cyclo.root_of_unity(rng.randrange(n), n))
        assert hecke_factor(d, (2, 1)).coeffs == hecke_factor(d, (3, 0)).coeffs


def test_pole_criterion():
    assert pole_criterion(3).kind == HAS_POLE
    assert pole_criterion(3).poles == (Q(0), Q(1))
    assert pole_criterion(3).simple
    assert pole_criterion(4).kind == ENTIRE
    assert pole_criterion(2).kind == ENTIRE
    assert pole_criterion(6).kind == ENTIRE    # chi^3 has order 2, not 1
    with pytest.raises(ValueError):
        pole_criterion(1)
    with pytest.raises(ValueError):
        pole_criterion(5, chi_is_trivial=True)
    with pytest.raises(ValueError):
        pole_criterion(0)
