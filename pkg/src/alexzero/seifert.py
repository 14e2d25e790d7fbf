"""Seifert and companion matrices of two-bridge knots, and the exact
Alexander polynomial det(tU - U^T).

The Seifert matrix U of the word [2a_1, ..., 2a_m] is banded: diagonal
(a_1, ..., a_m), with -1/+1 flanking entries on even rows only.  Its
companion matrix A = U^{-1} U^T has a closed form, which is built directly
and then validated through the exact identity U A = U^T.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exactmath import IntPoly, RatMatrix
from .twobridge import CFWord, classify

__all__ = [
    "NotApplicableError",
    "seifert_matrix",
    "companion_matrix",
    "alexander_poly",
    "normalized_alexander",
    "symmetric_companion",
]


class NotApplicableError(ValueError):
    """The word does not satisfy the construction's hypothesis."""


def seifert_matrix(w: CFWord) -> RatMatrix:
    """Banded Seifert matrix of the word; det equals the product of the a_i."""
    m = w.m
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):  # 0-based; "even rows" are odd i here
        rows[i][i] = Fraction(w[i])
        if (i + 1) % 2 == 0:
            rows[i][i - 1] = Fraction(-1)
            if i + 1 < m:
                rows[i][i + 1] = Fraction(1)
    return RatMatrix(rows)


def companion_matrix(w: CFWord) -> RatMatrix:
    """Companion matrix A = U^{-1} U^T from its closed form.

    No numeric inversion is involved; the construction is validated by
    asserting U A = U^T exactly before returning.
    """
    m = w.m
    a = w.a
    rows = [[Fraction(0)] * m for _ in range(m)]
    for idx in range(m):
        i = idx + 1  # 1-based row index, matching the banded pattern
        ai = Fraction(a[idx])
        if i % 2 == 1:
            rows[idx][idx] = Fraction(1)
            if idx > 0:
                rows[idx][idx - 1] = 1 / ai
            if idx + 1 < m:
                rows[idx][idx + 1] = -1 / ai
        else:
            prev = Fraction(a[idx - 1])
            diag = 1 - 1 / (prev * ai)
            if idx + 1 < m:
                nxt = Fraction(a[idx + 1])
                diag -= 1 / (ai * nxt)
                rows[idx][idx + 1] = -1 / ai
                if idx + 2 < m:
                    rows[idx][idx + 2] = 1 / (ai * nxt)
            rows[idx][idx] = diag
            rows[idx][idx - 1] = 1 / ai
            if idx - 2 >= 0:
                rows[idx][idx - 2] = 1 / (prev * ai)
    A = RatMatrix(rows)
    _assert_companion_identity(w, A)
    return A


def _assert_companion_identity(w: CFWord, A: RatMatrix) -> None:
    """Exact check U A = U^T, exploiting that row i of U has at most three
    nonzero entries (so the product costs O(m^2), not O(m^3))."""
    m = w.m
    for i in range(m):
        entries = [(i, Fraction(w[i]))]
        if (i + 1) % 2 == 0:
            entries.append((i - 1, Fraction(-1)))
            if i + 1 < m:
                entries.append((i + 1, Fraction(1)))
        for j in range(m):
            prod = sum(coef * A[k, j] for k, coef in entries)
            # U^T[i][j] is U[j][i]: a_j on the diagonal, -1/+1 beside even rows
            if j == i:
                expect = Fraction(w[i])
            elif (j + 1) % 2 == 0 and i == j - 1:
                expect = Fraction(-1)
            elif (j + 1) % 2 == 0 and i == j + 1:
                expect = Fraction(1)
            else:
                expect = Fraction(0)
            if prod != expect:
                raise AssertionError(
                    f"companion closed form failed U A = U^T for {w} at "
                    f"({i + 1}, {j + 1})")


def alexander_poly(w: CFWord) -> IntPoly:
    """Alexander polynomial det(tU - U^T), exact and unnormalized.

    tU - U^T is tridiagonal and for every k the product of its (k, k-1) and
    (k-1, k) entries is -t, so the determinant satisfies the three-term
    recurrence D_k = a_k (t-1) D_{k-1} + t D_{k-2}.  The result has degree m
    and leading coefficient prod a_i.
    """
    t_minus_1 = IntPoly((-1, 1))
    t = IntPoly((0, 1))
    d_prev, d_cur = IntPoly.one(), IntPoly.one()
    for k, ak in enumerate(w.a):
        if k == 0:
            d_prev, d_cur = d_cur, ak * t_minus_1
        else:
            d_prev, d_cur = d_cur, ak * (t_minus_1 * d_cur) + t * d_prev
    return d_cur


def normalized_alexander(w: CFWord) -> IntPoly:
    """Presentation view of alexander_poly: content divided out and the
    leading coefficient made positive."""
    return alexander_poly(w).primitive_positive()


def symmetric_companion(w: CFWord) -> np.ndarray:
    """Real symmetric companion matrix for alternating-sign words.

    Only defined when all adjacent products a_i a_{i+1} < 0; its eigenvalues
    are exactly the zeros of the Alexander polynomial, which is how the
    realness of those zeros is exhibited.  This is the one floating-point
    construction in the core: the entries involve 1/sqrt(|a_i a_{i+1}|).
    """
    if not classify(w).thm2_applicable:
        raise NotApplicableError(f"{w} does not have alternating signs")
    m = w.m
    mag = w.magnitudes()
    A = np.zeros((m, m))
    for idx in range(m):
        i = idx + 1
        if i % 2 == 1:
            A[idx, idx] = 1.0
        else:
            diag = 1.0 + 1.0 / (mag[idx - 1] * mag[idx])
            if idx + 1 < m:
                diag += 1.0 / (mag[idx] * mag[idx + 1])
            A[idx, idx] = diag
        if idx + 1 < m:
            band = 1.0 / np.sqrt(mag[idx] * mag[idx + 1])
            A[idx, idx + 1] = band if i % 2 == 0 else -band
            A[idx + 1, idx] = A[idx, idx + 1]
        if i % 2 == 0 and idx + 2 < m:
            val = -1.0 / (mag[idx + 1] * np.sqrt(mag[idx] * mag[idx + 2]))
            A[idx, idx + 2] = val
            A[idx + 2, idx] = val
    return A
