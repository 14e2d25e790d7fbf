import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alexzero.exactmath import (
    IntPoly,
    NotFoldableError,
    NotSymmetricError,
    RatMatrix,
    SturmChain,
    ZeroPolynomialError,
    ldlt_positive_definite,
    palindrome_sign,
    poly_div_exact,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
    sturm_real_root_count,
    symmetric_fold,
    symmetric_unfold,
)

P = IntPoly


# --- IntPoly basics ---------------------------------------------------------

def test_trailing_zeros_trimmed():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).is_zero()
    assert P([]).degree == -1


def test_arithmetic_and_eval():
    p = P([1, -3, 1])
    q = P([-1, 1])
    assert (p * q).coeffs == (-1, 4, -4, 1)
    assert (p + q).coeffs == (0, -2, 1)
    assert p(Fraction(1, 2)) == Fraction(-1, 4)
    assert p(2) == -1
    assert p.derivative().coeffs == (-3, 2)


def test_compose_linear():
    p = P([-1, 1, 1])  # y^2 + y - 1
    assert p.compose_linear(1, -4).coeffs == (11, -7, 1)


def test_primitive_positive():
    assert P([-2, -4]).primitive_positive().coeffs == (1, 2)
    assert P([6, 9]).primitive_positive().coeffs == (2, 3)


# --- palindromes and folding ------------------------------------------------

def test_palindrome_sign_cases():
    assert palindrome_sign(P([1, -1, 1])) == 1
    assert palindrome_sign(P([-1, 1])) == -1
    assert palindrome_sign(P([0, 1, 1])) is None
    with pytest.raises(ZeroPolynomialError):
        palindrome_sign(P([]))


def test_symmetric_fold_examples():
    # expanding t^2 ((t+1/t)^2 - 7(t+1/t) + 11) reproduces the quartic
    assert symmetric_fold(P([1, -7, 13, -7, 1])).coeffs == (11, -7, 1)
    assert symmetric_fold(P([1, 0, 1])).coeffs == (0, 1)
    assert symmetric_fold(P([1, -3, 1])).coeffs == (-3, 1)


def test_fold_rejects_non_palindromic():
    with pytest.raises(NotFoldableError):
        symmetric_fold(P([-1, 1]))  # sign -1
    with pytest.raises(NotFoldableError):
        symmetric_fold(P([1, 1]))  # odd degree


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
def test_fold_unfold_round_trip(coeffs):
    q = P(coeffs)
    if q.is_zero():
        return
    p = symmetric_unfold(q)
    assert palindrome_sign(p) == 1
    assert symmetric_fold(p) == q


def test_unfold_of_fold_is_identity():
    for coeffs in [(1, -7, 13, -7, 1), (1, 0, 1), (1, -3, 1), (2, 5, 9, 5, 2)]:
        p = P(coeffs)
        assert symmetric_unfold(symmetric_fold(p)) == p


# --- gcd / division / squarefree machinery ----------------------------------

def test_poly_div_exact():
    p = P([-1, 0, 1])  # (t-1)(t+1)
    assert poly_div_exact(p, P([-1, 1])).coeffs == (1, 1)
    with pytest.raises(ArithmeticError):
        poly_div_exact(P([1, 1, 1]), P([-1, 1]))


def test_poly_gcd_known():
    f = P([-1, 1]) * P([-1, 1]) * P([1, 0, 1])
    assert poly_gcd(f, f.derivative()).coeffs == (-1, 1)
    assert squarefree_part(f) == P([-1, 1]) * P([1, 0, 1])


def test_squarefree_decomposition_reconstructs():
    rng = random.Random(7)
    for _ in range(50):
        base = [P([rng.randint(-3, 3), rng.randint(1, 3)]) for _ in range(3)]
        mults = [rng.randint(1, 3) for _ in range(3)]
        prod = P([1])
        for b, k in zip(base, mults):
            for _ in range(k):
                prod = prod * b
        rebuilt = P([1])
        for f, k in squarefree_decomposition(prod):
            assert squarefree_part(f) == f.primitive_positive()
            for _ in range(k):
                rebuilt = rebuilt * f
        assert rebuilt.primitive_positive() == prod.primitive_positive()


# --- Sturm chains -----------------------------------------------------------

def test_sturm_examples():
    assert sturm_real_root_count(P([1, -1, 1])) == 0  # discriminant < 0
    assert sturm_real_root_count(P([-1, 1])) == 1
    # roots (3 +- sqrt 5)/2 ~ 0.382, 2.618: one inside (0, 1]
    assert sturm_real_root_count(P([1, -3, 1]), 0, 1) == 1
    assert sturm_real_root_count(P([1, -3, 1]), 0, None) == 2
    assert sturm_real_root_count(P([1, -3, 1]), None, 0) == 0


def test_sturm_endpoint_is_root():
    # interval is half open: (lo, hi] includes a root at hi, excludes at lo
    p = P([-1, 1])
    assert sturm_real_root_count(p, 0, 1) == 1
    assert sturm_real_root_count(p, 1, 2) == 0


def test_sturm_multiple_roots_counted_once():
    p = P([-1, 1]) * P([-1, 1]) * P([-2, 1])
    assert sturm_real_root_count(p) == 2


def test_sturm_validation():
    with pytest.raises(ZeroPolynomialError):
        sturm_real_root_count(P([]))
    with pytest.raises(ValueError):
        sturm_real_root_count(P([-1, 1]), 2, 1)


def test_sturm_chain_structure():
    p = P([1, -3, 1])
    chain = SturmChain.of(p)
    assert chain.polys[0] == p
    assert chain.polys[1] == p.derivative()
    assert chain.is_squarefree_certified()
    assert chain.polys[-1].degree == 0


def test_sturm_count_matches_numpy_on_random_polys():
    # independent numeric oracle: count real roots of 1000 random
    # squarefree integer polynomials with numpy's eigenvalue solver
    rng = random.Random(12345)
    checked = 0
    while checked < 1000:
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
        p = P(coeffs)
        if squarefree_part(p) != p.primitive_positive():
            continue
        roots = np.roots(list(reversed(p.coeffs)))
        n_real = sum(1 for r in roots if abs(r.imag) < 1e-9)
        exact = sturm_real_root_count(p)
        assert exact == n_real, (p, roots)
        assert exact <= p.degree
        checked += 1


def test_sturm_interval_matches_numpy():
    rng = random.Random(99)
    for _ in range(200):
        deg = rng.randint(2, 6)
        coeffs = [rng.randint(-6, 6) for _ in range(deg)] + [rng.randint(1, 6)]
        p = P(coeffs)
        if squarefree_part(p) != p.primitive_positive():
            continue
        roots = np.roots(list(reversed(p.coeffs)))
        reals = sorted(r.real for r in roots if abs(r.imag) < 1e-9)
        lo, hi = -3, 2
        expected = sum(1 for r in reals if lo < r <= hi and abs(r - lo) > 1e-6
                       and abs(r - hi) > 1e-6)
        got = sturm_real_root_count(p, lo, hi)
        if all(abs(r - lo) > 1e-6 and abs(r - hi) > 1e-6 for r in reals):
            assert got == expected, (p, reals)


# --- rational matrices and LDL^T --------------------------------------------

def test_ratmatrix_ops():
    m = RatMatrix([[1, 2], [3, 4]])
    assert m.transpose() == RatMatrix([[1, 3], [2, 4]])
    assert (m @ RatMatrix.identity(2)) == m
    assert m.determinant() == -2
    assert not m.is_symmetric()
    assert RatMatrix([[1, 2], [2, 1]]).is_symmetric()
    with pytest.raises(ValueError):
        RatMatrix([[1, 2], [3]])


def test_ldlt_examples():
    v = ldlt_positive_definite(RatMatrix([[2, 1], [1, 1]]))
    assert v.positive_definite and v.pivots == (Fraction(2), Fraction(1, 2))
    v = ldlt_positive_definite(RatMatrix([[1, 2], [2, 1]]))
    assert not v.positive_definite
    assert v.witness == 2 and v.pivots[-1] == -3
    v = ldlt_positive_definite(RatMatrix([[4, 0], [0, 2]]))
    assert v.positive_definite and v.pivots == (Fraction(4), Fraction(2))


def test_ldlt_zero_pivot_not_pd():
    v = ldlt_positive_definite(RatMatrix([[0, 0], [0, 2]]))
    assert not v.positive_definite and v.witness == 1


def test_ldlt_requires_symmetry():
    with pytest.raises(NotSymmetricError):
        ldlt_positive_definite(RatMatrix([[1, 2], [3, 4]]))


def test_ldlt_matches_numpy_eigenvalues():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 5)
        raw = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        sym = [[raw[i][j] + raw[j][i] for j in range(n)] for i in range(n)]
        verdict = ldlt_positive_definite(RatMatrix(sym))
        eigs = np.linalg.eigvalsh(np.array(sym, dtype=float))
        assert verdict.positive_definite == bool(eigs.min() > 1e-9), sym


@given(st.integers(-10**18, 10**18), st.integers(1, 10**18),
       st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_arithmetic_stays_normalized(a, b, c, d):
    x = Fraction(a, b) * Fraction(c, d) + Fraction(a, d)
    from math import gcd
    assert x.denominator >= 1
    assert gcd(abs(x.numerator), x.denominator) == 1
