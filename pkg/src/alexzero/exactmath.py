"""Exact arithmetic kernel: integer polynomials, rational matrices,
Sturm chains, palindromic folding and rational LDL^T factorization.

Everything in this module is exact. ``Rational`` is an alias of
``fractions.Fraction``, which already keeps every value reduced with a
positive denominator, so all derived quantities (pivots, matrix entries,
continued-fraction tails) inherit those invariants for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction

RationalLike = Union[int, Fraction]

__all__ = [
    "Rational",
    "IntPoly",
    "RatMatrix",
    "SturmChain",
    "PDVerdict",
    "ZeroPolynomialError",
    "NotFoldableError",
    "NotSymmetricError",
    "sturm_real_root_count",
    "ldlt_positive_definite",
    "palindrome_sign",
    "symmetric_fold",
    "symmetric_unfold",
    "poly_gcd",
    "poly_div_exact",
    "squarefree_part",
    "squarefree_decomposition",
]


class ZeroPolynomialError(ValueError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class NotFoldableError(ValueError):
    """Polynomial is not +1-palindromic of even degree."""


class NotSymmetricError(ValueError):
    """Matrix operation requires exact symmetry."""


class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of t^i.

    Immutable. Trailing zeros are trimmed, so the leading coefficient is
    nonzero unless the polynomial is zero (empty tuple, degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (IntPoly((other,)).coeffs)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    def __rmul__(self, other: int) -> "IntPoly":
        return self.__mul__(other)

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_positive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs))

    def scaled_primitive(self) -> "IntPoly":
        """Divide out the content, keeping the sign (a positive rescaling)."""
        if self.is_zero():
            return self
        g = self.content()
        return IntPoly(tuple(c // g for c in self.coeffs))

    def reciprocal(self) -> "IntPoly":
        """t^deg * p(1/t): the coefficient list reversed."""
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no reciprocal")
        return IntPoly(tuple(reversed(self.coeffs)))

    def compose_linear(self, scale: int, offset: int) -> "IntPoly":
        """Exact substitution p(scale*y + offset)."""
        inner = IntPoly((offset, scale))
        acc = IntPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPoly((c,))
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "t" if mag == 1 else f"{mag}*t"
            else:
                term = f"t^{i}" if mag == 1 else f"{mag}*t^{i}"
            parts.append(f"{sign}{term}" if not parts else f" {sign} {term}")
        return "".join(parts)


# ---------------------------------------------------------------------------
# division, gcd, squarefree machinery

def _signed_pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of f by g rescaled by a *positive* rational to integer form.

    Uses pseudo-division (premultiply by lc(g)^(deg f - deg g + 1)) so the
    whole computation stays in integers; a negative premultiplier is undone
    so the result has the sign of the true remainder.
    """
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if f.degree < g.degree:
        return f
    lc = g.leading()
    delta = f.degree - g.degree
    mult = lc ** (delta + 1)
    fc = [c * mult for c in f.coeffs]
    gc = g.coeffs
    n = g.degree
    for k in range(len(fc) - 1, n - 1, -1):
        c = fc[k]
        if c == 0:
            continue
        q, r = divmod(c, lc)
        if r != 0:
            raise ArithmeticError("pseudo-division lost integrality")
        fc[k] = 0
        for j in range(n):
            fc[k - n + j] -= q * gc[j]
    rem = IntPoly(fc[:n])
    if mult < 0:
        rem = -rem
    return rem.scaled_primitive()


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, _signed_pseudo_rem(a, b)
    return a.primitive_positive()


def poly_div_exact(p: IntPoly, q: IntPoly) -> IntPoly:
    """Exact quotient p / q; raises if q does not divide p over the integers."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return p
    num = [Fraction(c) for c in p.coeffs]
    den = q.coeffs
    dq = q.degree
    out = [Fraction(0)] * (len(num) - dq)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        coef = c / den[-1]
        out[k - dq] = coef
        if coef:
            for j in range(dq + 1):
                num[k - dq + j] -= coef * den[j]
    if any(num[:dq]):
        raise ArithmeticError("inexact polynomial division")
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("quotient is not integral")
    return IntPoly(tuple(int(c) for c in out))


def squarefree_part(p: IntPoly) -> IntPoly:
    """p divided by gcd(p, p'), made primitive with positive leading coeff."""
    if p.is_zero():
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return IntPoly.one()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive_positive()
    # g is primitive and divides p, so the quotient of primitive parts is
    # integral by Gauss's lemma
    return poly_div_exact(p.primitive_positive(), g).primitive_positive()


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: returns [(f, k), ...] with p = unit * prod f^k and
    each f squarefree, primitive, with positive leading coefficient."""
    if p.is_zero():
        raise ZeroPolynomialError("decomposition of the zero polynomial")
    if p.degree <= 0:
        return []
    return _yun_rational(p)


def _yun_rational(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's squarefree decomposition carried out over Fraction coefficients."""

    def to_frac(q: IntPoly) -> list[Fraction]:
        return [Fraction(c) for c in q.coeffs]

    def frac_divmod(f: list[Fraction], g: list[Fraction]):
        f = f[:]
        dg = len(g) - 1
        if dg < 0:
            raise ZeroDivisionError
        out = [Fraction(0)] * max(len(f) - dg, 0)
        for k in range(len(f) - 1, dg - 1, -1):
            coef = f[k] / g[-1]
            out[k - dg] = coef
            if coef:
                for j in range(dg + 1):
                    f[k - dg + j] -= coef * g[j]
        while f and not f[-1]:
            f.pop()
        return out, f

    def frac_gcd(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
        while g:
            _, r = frac_divmod(f, g)
            f, g = g, r
        if f:
            lead = f[-1]
            f = [c / lead for c in f]
        return f

    def deriv(f: list[Fraction]) -> list[Fraction]:
        return [i * c for i, c in enumerate(f) if i > 0]

    def sub(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
        out = list(f) + [Fraction(0)] * max(0, len(g) - len(f))
        for i, c in enumerate(g):
            out[i] -= c
        while out and not out[-1]:
            out.pop()
        return out

    def to_int(f: list[Fraction]) -> IntPoly:
        from math import lcm

        den = 1
        for c in f:
            den = lcm(den, c.denominator)
        return IntPoly(tuple(int(c * den) for c in f)).primitive_positive()

    fp = to_frac(p)
    dfp = deriv(fp)
    a = frac_gcd(fp, dfp)
    if len(a) - 1 == 0:
        return [(p.primitive_positive(), 1)]
    b, _ = frac_divmod(fp, a)
    c, _ = frac_divmod(dfp, a)
    d = sub(c, deriv(b))
    factors: list[tuple[IntPoly, int]] = []
    k = 1
    while len(b) - 1 > 0:
        g = frac_gcd(b, d)
        if len(g) - 1 > 0:
            factors.append((to_int(g), k))
        b, _ = frac_divmod(b, g)
        c, _ = frac_divmod(d, g)
        d = sub(c, deriv(b))
        k += 1
    return factors


# ---------------------------------------------------------------------------
# palindromes and the x = t + 1/t substitution

def palindrome_sign(p: IntPoly) -> Optional[int]:
    """+1 or -1 when t^n p(1/t) = sign * p(t) identically, else None."""
    if p.is_zero():
        raise ZeroPolynomialError("palindrome test on the zero polynomial")
    fwd = p.coeffs
    rev = tuple(reversed(fwd))
    if rev == fwd:
        return 1
    if rev == tuple(-c for c in fwd):
        return -1
    return None


def symmetric_fold(p: IntPoly) -> IntPoly:
    """Fold a +1-palindromic polynomial of degree 2m into q with
    p(t) = t^m q(t + 1/t); q has exact integer coefficients."""
    if p.is_zero():
        raise ZeroPolynomialError("fold of the zero polynomial")
    if palindrome_sign(p) != 1 or p.degree % 2 != 0:
        raise NotFoldableError(f"not +1-palindromic of even degree: {p!r}")
    m = p.degree // 2
    work = list(p.coeffs)
    q = [0] * (m + 1)
    for d in range(m, -1, -1):
        c = work[m + d]
        q[d] = c
        if c:
            # subtract c * t^(m-d) * (t^2+1)^d, which contributes
            # c * C(d, j) at exponent m - d + 2j
            for j in range(d + 1):
                work[m - d + 2 * j] -= c * comb(d, j)
    if any(work):
        raise AssertionError("palindromic fold left a nonzero remainder")
    return IntPoly(q)


def symmetric_unfold(q: IntPoly) -> IntPoly:
    """Expand t^m q(t + 1/t) for m = deg q; exact right inverse of
    symmetric_fold."""
    if q.is_zero():
        raise ZeroPolynomialError("unfold of the zero polynomial")
    m = q.degree
    out = [0] * (2 * m + 1)
    for d, c in enumerate(q.coeffs):
        if c == 0:
            continue
        for j in range(d + 1):
            out[m - d + 2 * j] += c * comb(d, j)
    return IntPoly(out)


# ---------------------------------------------------------------------------
# Sturm chains

def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _sign_at(p: IntPoly, x: Fraction) -> int:
    """Exact sign of p(x) at a rational point, in pure integer arithmetic.

    Evaluates b^n p(a/b) = sum c_i a^i b^(n-i) by Horner; b > 0 so the sign
    is the sign of p(x).
    """
    a, b = x.numerator, x.denominator
    total = 0
    bp = 1
    for i in range(p.degree, -1, -1):
        total = total * a + p.coeffs[i] * bp
        bp *= b
    return _sign(total)


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder sequence of p and p'.

    Each element after the first two is the negated remainder of the
    previous pair, rescaled by a positive rational to a primitive integer
    polynomial; positive rescaling leaves every sign variation count
    unchanged.
    """

    polys: tuple[IntPoly, ...]

    @classmethod
    def of(cls, p: IntPoly) -> "SturmChain":
        if p.is_zero():
            raise ZeroPolynomialError("Sturm chain of the zero polynomial")
        chain = [p, p.derivative()]
        if chain[1].is_zero():
            chain.pop()
        while chain[-1].degree > 0:
            r = _signed_pseudo_rem(chain[-2], chain[-1])
            if r.is_zero():
                break
            chain.append(-r)
        return cls(tuple(chain))

    def is_squarefree_certified(self) -> bool:
        """True when the chain terminates in a nonzero constant, which
        happens exactly when gcd(p, p') is constant."""
        return self.polys[-1].degree == 0

    def variations(self, x: Optional[RationalLike], *, at_infinity: int = 0) -> int:
        """Number of sign changes through the chain at x; zeros are skipped.

        at_infinity: -1 evaluates at -inf, +1 at +inf (x is ignored then).
        """
        signs = []
        for q in self.polys:
            if q.is_zero():
                continue
            if at_infinity > 0:
                s = _sign(q.leading())
            elif at_infinity < 0:
                s = _sign(q.leading()) * (-1) ** q.degree
            else:
                s = _sign_at(q, Fraction(x))
            if s != 0:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: Optional[RationalLike] = None,
              hi: Optional[RationalLike] = None) -> int:
        """Distinct real roots in (lo, hi]; None endpoints mean -inf / +inf."""
        v_lo = self.variations(lo, at_infinity=-1 if lo is None else 0)
        v_hi = self.variations(hi, at_infinity=+1 if hi is None else 0)
        return v_lo - v_hi


def sturm_real_root_count(p: IntPoly, lo: Optional[RationalLike] = None,
                          hi: Optional[RationalLike] = None) -> int:
    """Exact number of distinct real roots of p in (lo, hi].

    None endpoints stand for -inf (lo) and +inf (hi). p is reduced to its
    squarefree part internally when gcd(p, p') is nonconstant.
    """
    if p.is_zero():
        raise ZeroPolynomialError("root count of the zero polynomial")
    if lo is not None and hi is not None and not Fraction(lo) < Fraction(hi):
        raise ValueError("need lo < hi")
    if p.degree == 0:
        return 0
    chain = SturmChain.of(p)
    if not chain.is_squarefree_certified():
        chain = SturmChain.of(squarefree_part(p))
    n = chain.count(lo, hi)
    if n < 0:
        raise AssertionError("negative Sturm count")
    return n


# ---------------------------------------------------------------------------
# rational matrices and LDL^T

class RatMatrix:
    """Small dense square matrix of exact rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        rs = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if not rs:
            raise ValueError("matrix must have dimension >= 1")
        n = len(rs)
        if any(len(r) != n for r in rs):
            raise ValueError("matrix must be square")
        self.rows: tuple[tuple[Fraction, ...], ...] = rs

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[RationalLike]) -> "RatMatrix":
        n = len(entries)
        return cls([[Fraction(entries[i]) if i == j else Fraction(0)
                     for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.rows))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = other.transpose().rows
        return RatMatrix([[sum(a * b for a, b in zip(row, col))
                           for col in cols] for row in self.rows])

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)])

    def __rmul__(self, scalar: RationalLike) -> "RatMatrix":
        s = Fraction(scalar)
        return RatMatrix([[s * v for v in row] for row in self.rows])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def is_tridiagonal(self) -> bool:
        n = self.dim
        return all(self.rows[i][j] == 0
                   for i in range(n) for j in range(n) if abs(i - j) > 1)

    def determinant(self) -> Fraction:
        """Exact determinant by fraction-free-ish Gaussian elimination."""
        n = self.dim
        m = [list(row) for row in self.rows]
        det = Fraction(1)
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != col:
                m[col], m[pivot_row] = m[pivot_row], m[col]
                det = -det
            pivot = m[col][col]
            det *= pivot
            for r in range(col + 1, n):
                if m[r][col]:
                    factor = m[r][col] / pivot
                    for c in range(col, n):
                        m[r][c] -= factor * m[col][c]
        return det

    def __repr__(self) -> str:
        body = "; ".join("[" + ", ".join(str(v) for v in row) + "]"
                         for row in self.rows)
        return f"RatMatrix({body})"


@dataclass(frozen=True)
class PDVerdict:
    """Outcome of an exact LDL^T factorization.

    pivots holds every diagonal pivot computed before stopping, so the
    certificate can be replayed; witness is the 1-based index of the first
    nonpositive pivot (None when the matrix is positive definite).
    """

    positive_definite: bool
    pivots: tuple[Fraction, ...]
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.positive_definite


def ldlt_positive_definite(M: RatMatrix) -> PDVerdict:
    """Exact LDL^T without pivoting; positive definite iff all pivots > 0.

    A zero or negative pivot at (1-based) index i stops the factorization
    and is returned as the witness: by Sylvester's criterion it certifies
    that M is not positive definite.
    """
    if not M.is_symmetric():
        raise NotSymmetricError("LDL^T needs an exactly symmetric matrix")
    n = M.dim
    pivots: list[Fraction] = []
    low: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        d = M[j, j] - sum(low[j][k] * low[j][k] * pivots[k] for k in range(j))
        pivots.append(d)
        if d <= 0:
            return PDVerdict(False, tuple(pivots), witness=j + 1)
        for i in range(j + 1, n):
            s = M[i, j] - sum(low[i][k] * low[j][k] * pivots[k] for k in range(j))
            low[i][j] = s / d
    return PDVerdict(True, tuple(pivots))
