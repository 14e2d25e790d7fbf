"""Rigorous zero-location certificates via Lyapunov residuals.

For a companion matrix A of the Alexander polynomial and a positive
definite V, positive definiteness of W = V(kE+A) + (kE+A^T)V certifies that
every zero has real part > -k; with W = V(qE-A) + (qE-A^T)V it certifies
real part < q.  Positive definiteness itself is proved two independent
ways: exact LDL^T pivots, and a diagonal-dominance argument on the
tridiagonal block left after an explicit congruence (the block reports).

All block quantities are exact rationals, so every report can be replayed
by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .exactmath import (
    NotSymmetricError,
    PDVerdict,
    RatMatrix,
    RationalLike,
    ldlt_positive_definite,
)
from .seifert import NotApplicableError, companion_matrix
from .twobridge import CFWord, classify, sign_runs

__all__ = [
    "CertificateReport",
    "BlockReport",
    "NotTridiagonalError",
    "NotApplicableError",
    "positivity_lemma_check",
    "lyapunov_certificate",
    "theorem_blocks",
    "theorem4_check",
]


class NotTridiagonalError(ValueError):
    """Matrix has entries beyond the first off-diagonal."""


Side = Literal["lower", "upper"]
VChoice = Literal["identity", "diag-a"]
TheoremName = Literal["t1-lower", "t1-upper", "t3"]


@dataclass(frozen=True)
class CertificateReport:
    """Machine-checkable record of one Lyapunov positive-definiteness proof.

    kind "lower" with bound k certifies Re > -k for every zero; kind
    "upper" with bound q certifies Re < q.  A not-positive-definite verdict
    only means this particular V fails to certify the bound.
    """

    kind: Side
    bound: Fraction
    v_choice: VChoice
    W: RatMatrix
    verdict: PDVerdict
    implied: str

    @property
    def certified(self) -> bool:
        return self.verdict.positive_definite

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": str(self.bound),
            "v": self.v_choice,
            "pivots": [str(p) for p in self.verdict.pivots],
            "verdict": "positive-definite" if self.certified
                       else "not-positive-definite",
            "implied": self.implied,
        }


@dataclass(frozen=True)
class BlockReport:
    """Exact block data of the congruence-reduced Lyapunov residual.

    diag_entries are the decoupled diagonal entries (2k+2, 2q-2 or
    4a_{2i-1} each); alphas/betas are the diagonal and off-diagonal of the
    remaining tridiagonal block.  lemma_ok records whether the dominance
    lemma proves that block (and hence the whole residual) positive
    definite.
    """

    theorem: str
    diag_entries: tuple[Fraction, ...]
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]
    lemma_ok: bool


def positivity_lemma_check(N: RatMatrix) -> bool:
    """Dominance test for a symmetric tridiagonal matrix.

    True iff every diagonal entry is positive, every row is weakly
    dominant (diag >= sum of |off-diagonal| neighbours), and inside each
    block delimited by zero off-diagonal entries at least one row is
    strictly dominant.  These conditions force positive definiteness.
    """
    if not N.is_symmetric():
        raise NotSymmetricError("dominance test needs a symmetric matrix")
    if not N.is_tridiagonal():
        raise NotTridiagonalError("dominance test needs a tridiagonal matrix")
    n = N.dim
    strict_in_block = False
    for j in range(n):
        diag = N[j, j]
        if diag <= 0:
            return False
        left = abs(N[j, j - 1]) if j > 0 else Fraction(0)
        right = abs(N[j, j + 1]) if j + 1 < n else Fraction(0)
        if diag < left + right:
            return False
        if diag > left + right:
            strict_in_block = True
        block_ends = j + 1 == n or N[j, j + 1] == 0
        if block_ends:
            if not strict_in_block:
                return False
            strict_in_block = False
    return True


def lyapunov_certificate(w: CFWord, side: Side, bound: RationalLike,
                         v: VChoice = "identity") -> CertificateReport:
    """Build the Lyapunov residual W exactly and factor it.

    side "lower" with bound k > 0 targets Re > -k, side "upper" with bound
    q > 0 targets Re < q.  A positive-definite verdict is a complete proof
    of the bound; the opposite verdict leaves the bound uncertified (this V
    is sufficient, not necessary).
    """
    b = Fraction(bound)
    if b <= 0:
        raise ValueError("bound must be positive")
    A = companion_matrix(w)
    # both supported V are diagonal, so VA is V's diagonal scaling the rows
    # of A and A^T V is its transpose; no full matrix products are needed
    vd = [Fraction(1)] * w.m if v == "identity" else \
        [Fraction(abs(x)) for x in w.a]
    if v not in ("identity", "diag-a"):
        raise ValueError(f"unknown V choice {v!r}")
    n = w.m
    va = [[vd[i] * A[i, j] for j in range(n)] for i in range(n)]
    sign = 1 if side == "lower" else -1
    if side == "lower":
        implied = f"all zeros satisfy Re > -{b}"
    elif side == "upper":
        implied = f"all zeros satisfy Re < {b}"
    else:
        raise ValueError(f"unknown side {side!r}")
    W = RatMatrix([[sign * (va[i][j] + va[j][i]) +
                    (2 * b * vd[i] if i == j else 0)
                    for j in range(n)] for i in range(n)])
    verdict = ldlt_positive_definite(W)
    if not verdict.positive_definite:
        implied = "uncertified"
    return CertificateReport(kind=side, bound=b, v_choice=v, W=W,
                             verdict=verdict, implied=implied)


# ---------------------------------------------------------------------------
# exact block data for the k=3 / q=6 strip proof (V = E)

def _t1_b(w: CFWord) -> list[Fraction]:
    """b_j = -1/a_j + 1/a_{j+1} for j = 1..m-1 (index 0 unused)."""
    a = w.a
    out = [Fraction(0)] * len(a)
    for j in range(1, len(a)):
        out[j] = Fraction(-1, a[j - 1]) + Fraction(1, a[j])
    return out


def _t1_lower_blocks(w: CFWord) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
    """Diagonal entries, alphas, betas for W = 2kE + A + A^T with k = 3."""
    k = Fraction(3)
    two_k2 = 2 * k + 2
    a = w.a
    m = len(a)
    half = m // 2
    b = _t1_b(w)

    def c_j(j: int) -> Fraction:
        # diagonal of A0 at even position 2j; the trailing term exists only
        # when a_{2j+1} does
        val = two_k2 - Fraction(2, a[2 * j - 2] * a[2 * j - 1])
        if 2 * j < m:
            val -= Fraction(2, a[2 * j - 1] * a[2 * j])
        return val

    def d_j(j: int) -> Fraction:
        return Fraction(1, a[2 * j - 1] * a[2 * j]) + \
            Fraction(1, a[2 * j] * a[2 * j + 1])

    alphas: list[Fraction] = []
    for j in range(1, half + 1):
        val = c_j(j) - b[2 * j - 1] ** 2 / two_k2
        if 2 * j < m:
            val -= b[2 * j] ** 2 / two_k2
        alphas.append(val)
    betas = [d_j(j) - b[2 * j] * b[2 * j + 1] / two_k2
             for j in range(1, half)]
    diag = [two_k2] * (m - half)
    return diag, alphas, betas


def _t1_upper_blocks(w: CFWord) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
    """Diagonal entries, gammas, deltas for W = 2qE - (A + A^T) with q = 6."""
    q = Fraction(6)
    two_q2 = 2 * q - 2
    a = w.a
    m = len(a)
    half = m // 2
    b = _t1_b(w)

    def e_j(j: int) -> Fraction:
        val = two_q2 + Fraction(2, a[2 * j - 2] * a[2 * j - 1])
        if 2 * j < m:
            val += Fraction(2, a[2 * j - 1] * a[2 * j])
        return val

    def d_j(j: int) -> Fraction:
        return Fraction(1, a[2 * j - 1] * a[2 * j]) + \
            Fraction(1, a[2 * j] * a[2 * j + 1])

    gammas: list[Fraction] = []
    for j in range(1, half + 1):
        val = e_j(j) - b[2 * j - 1] ** 2 / two_q2
        if 2 * j < m:
            val -= b[2 * j] ** 2 / two_q2
        gammas.append(val)
    deltas = [-d_j(j) - b[2 * j] * b[2 * j + 1] / two_q2
              for j in range(1, half)]
    diag = [two_q2] * (m - half)
    return diag, gammas, deltas


def _t3_blocks(w: CFWord) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
    """Blocks of P W P^T for W = V(E+A) + (E+A^T)V with V = diag|a_i|.

    Writing the word as (eps_1 a_1, ..., eps_m a_m) with a_i > 0, the
    decoupled diagonal holds 4a_{odd}, and the tridiagonal block over the
    even positions has

      alpha_{2i} = 4a_{2i} - (3/2) eps_{2i-1,2i}/a_{2i-1}
                           - (3/2) eps_{2i,2i+1}/a_{2i+1}
                           - 1/(2a_{2i-1}) - 1/(2a_{2i+1})

    (the a_{2i+1} terms drop for the final even position when m is even) and

      beta_{2i} = (3/4)(eps_{2i,2i+1} + eps_{2i+1,2i+2})/a_{2i+1}
                + (eps_{2i,2i+2} + 1)/(4a_{2i+1}).
    """
    mag = w.magnitudes()
    eps = w.signs()
    m = w.m
    half = m // 2

    def e2(i: int, j: int) -> int:
        return eps[i - 1] * eps[j - 1]

    alphas: list[Fraction] = []
    for i in range(1, half + 1):
        p = 2 * i
        val = Fraction(4 * mag[p - 1])
        val -= Fraction(3, 2) * Fraction(e2(p - 1, p), mag[p - 2])
        val -= Fraction(1, 2 * mag[p - 2])
        if p < m:
            val -= Fraction(3, 2) * Fraction(e2(p, p + 1), mag[p])
            val -= Fraction(1, 2 * mag[p])
        alphas.append(val)
    betas: list[Fraction] = []
    for i in range(1, half):
        p = 2 * i
        num = Fraction(3, 4) * Fraction(e2(p, p + 1) + e2(p + 1, p + 2), mag[p])
        num += Fraction(e2(p, p + 2) + 1, 4 * mag[p])
        betas.append(num)
    diag = [Fraction(4 * mag[i]) for i in range(0, m, 2)]
    return diag, alphas, betas


def _lemma_on_blocks(diag: list[Fraction], alphas: list[Fraction],
                     betas: list[Fraction]) -> bool:
    if any(d <= 0 for d in diag):
        return False
    if not alphas:
        return True
    n = len(alphas)
    tri = [[Fraction(0)] * n for _ in range(n)]
    for i, v in enumerate(alphas):
        tri[i][i] = v
    for i, v in enumerate(betas):
        tri[i][i + 1] = v
        tri[i + 1][i] = v
    return positivity_lemma_check(RatMatrix(tri))


def theorem_blocks(w: CFWord, theorem: TheoremName) -> BlockReport:
    """Exact congruence blocks for the strip bounds or the diag|a| proof.

    "t1-lower" replays the Re > -3 argument (k = 3, V = E), "t1-upper" the
    Re < 6 argument (q = 6, V = E).  "t3" replays the Re > -1 argument with
    V = diag|a_i|.  The t3 blocks are well defined for every word, but
    lemma_ok is only guaranteed when no adjacent product a_i a_{i+1}
    equals 1 (run-of-two fibered words also pass; see theorem4_check).
    """
    if theorem == "t1-lower":
        diag, alphas, betas = _t1_lower_blocks(w)
    elif theorem == "t1-upper":
        diag, alphas, betas = _t1_upper_blocks(w)
    elif theorem == "t3":
        diag, alphas, betas = _t3_blocks(w)
    else:
        raise ValueError(f"unknown theorem {theorem!r}")
    return BlockReport(
        theorem=theorem,
        diag_entries=tuple(diag),
        alphas=tuple(alphas),
        betas=tuple(betas),
        lemma_ok=_lemma_on_blocks(diag, alphas, betas),
    )


def theorem4_check(w: CFWord) -> bool:
    """Conjecture check for fibered words by sign-run inspection.

    True iff every maximal run of equal signs has length 1 or 2 and the
    resulting diag|a| block report is proved by the dominance lemma with
    the expected exact block values: interior alphas (and the final alpha
    when m is odd) in {3, 6}, the final alpha in {2, 5} when m is even, and
    every beta in {0, -1}.
    """
    if not classify(w).fibered:
        raise NotApplicableError(f"{w} is not fibered")
    if any(r > 2 for r in sign_runs(w)):
        return False
    diag, alphas, betas = _t3_blocks(w)
    if not _lemma_on_blocks(diag, alphas, betas):
        return False
    m = w.m
    for i, val in enumerate(alphas, start=1):
        if 2 * i < m:
            if val not in (3, 6):
                return False
        else:  # final even position; reduced form when m is even
            allowed = (3, 6) if m % 2 == 1 else (2, 5)
            if val not in allowed:
                return False
    return all(v in (0, -1) for v in betas)
