"""Complex zero location for integer polynomials.

Simultaneous Aberth-Ehrlich iteration with Newton polishing, wrapped in
three independent safety nets: a per-zero relative residual bound, an exact
Sturm count of the real zeros, and a conjugate-pairing check.  The zero set
is deterministic: initial guesses come from a fixed layout on the Cauchy
circle, never from a random source.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import (
    IntPoly,
    SturmChain,
    ZeroPolynomialError,
    _sign_at,
    palindrome_sign,
    squarefree_decomposition,
    sturm_real_root_count,
    symmetric_fold,
)

__all__ = [
    "ZeroSet",
    "ZeroReport",
    "NoConvergenceError",
    "find_zeros",
    "zero_report",
    "RESIDUAL_BOUND",
    "REAL_AXIS_SNAP",
]

# residual and snapping thresholds are part of the ZeroSet contract, not
# tunable per call
RESIDUAL_BOUND = 1e-9
REAL_AXIS_SNAP = 1e-7

_MAX_ITER = 200


class NoConvergenceError(RuntimeError):
    """Root iteration failed a convergence or consistency check."""

    def __init__(self, message: str, budget: int = _MAX_ITER):
        super().__init__(message)
        self.budget = budget


@dataclass(frozen=True)
class ZeroSet:
    """All zeros of a polynomial, with multiplicity, plus the evidence that
    they are trustworthy: per-zero relative residuals and the exact count of
    real zeros from a Sturm chain."""

    zeros: tuple[complex, ...]
    residuals: tuple[float, ...]
    real_count_exact: int
    tol: float


@dataclass(frozen=True)
class ZeroReport:
    """Aggregate location facts about a zero set."""

    min_re: float
    max_re: float
    hoste_ok: bool
    thm1_ok: bool
    all_real: bool
    all_positive_real: bool
    reciprocal_paired: bool


def _float_coeffs(p: IntPoly) -> list[float]:
    """Ascending coefficients scaled by the largest magnitude, converted
    through Fraction so huge integers round correctly."""
    scale = max(abs(c) for c in p.coeffs)
    return [float(Fraction(c, scale)) for c in p.coeffs]


def _aberth(p: IntPoly, tol: float) -> list[complex]:
    """All zeros of a squarefree polynomial by simultaneous iteration.

    Gauss-Seidel style updates (each correction sees the roots already
    moved this round); initial guesses sit on the Cauchy circle at fixed
    angles, so the whole computation is deterministic.
    """
    n = p.degree
    if n == 1:
        return [complex(-Fraction(p.coeffs[0], p.coeffs[1]))]
    # exact Taylor shift to the nearest integer of the root centroid
    # -c_{n-1}/(n c_n); this absorbs the catastrophic cancellation that the
    # monomial basis suffers when all roots cluster far from the origin
    shift = round(Fraction(-p.coeffs[-2], n * p.coeffs[-1]))
    if shift:
        p = p.compose_linear(1, shift)
    c = _float_coeffs(p)
    dc = [i * v for i, v in enumerate(c) if i > 0]
    # Fujiwara bound: 2 max_k |c_{n-k}/c_n|^(1/k); far tighter than the
    # Cauchy bound when inner coefficients dominate
    lead = abs(c[-1])
    radius = 2.0 * max((abs(c[n - k]) / lead) ** (1.0 / k)
                       for k in range(1, n + 1))
    step = 2.0 * math.pi / n
    z = [radius * complex(math.cos(step * (k + 0.25) + 0.5 / n),
                          math.sin(step * (k + 0.25) + 0.5 / n))
         for k in range(n)]
    crev = c[::-1]
    dcrev = dc[::-1]
    # a root is settled when its correction is below tol or its relative
    # residual has reached the double-precision floor (clustered zeros make
    # the correction stagnate while the residual is already exact); the
    # floor is the standard Horner forward-error bound
    floor = (2.0 * n + 2.0) * 2.220446049250313e-16
    for _ in range(_MAX_ITER):
        settled = True
        for i in range(n):
            zi = z[i]
            pv = 0j
            den = 0.0
            az = abs(zi)
            for v in crev:
                pv = pv * zi + v
                den = den * az + abs(v)
            if den and abs(pv) / den <= floor:
                continue
            dpv = 0j
            for v in dcrev:
                dpv = dpv * zi + v
            if dpv == 0:
                dpv = 1e-300
            newton = pv / dpv
            s = 0j
            for j in range(n):
                if j != i:
                    s += 1.0 / (zi - z[j])
            denom = 1.0 - newton * s
            if denom == 0:
                denom = 1e-300
            delta = newton / denom
            z[i] = zi - delta
            if abs(delta) > tol * max(1.0, abs(z[i])):
                settled = False
        if settled:
            break
    else:
        raise NoConvergenceError(
            f"Aberth iteration did not converge in {_MAX_ITER} steps for {p!r}")
    for _ in range(3):
        for i in range(n):
            zi = z[i]
            pv = 0j
            for v in crev:
                pv = pv * zi + v
            dpv = 0j
            for v in dcrev:
                dpv = dpv * zi + v
            if dpv != 0:
                z[i] = zi - pv / dpv
    if shift:
        z = [v + shift for v in z]
    return z


def _palindromic_zeros(f: IntPoly, tol: float) -> list[complex]:
    """Zeros of a +1-palindromic polynomial of even degree 2m.

    Exact fold to q with f(t) = t^m q(t + 1/t), locate the m zeros of q
    (half the degree and far better conditioned for the clustered real
    spectra in this domain), then map each x back to the reciprocal pair
    t = (x +- sqrt(x^2 - 4))/2.  The pair is emitted as (t, 1/t) so
    reciprocal symmetry is exact.  Mapped roots are not Newton-polished:
    for ill-conditioned f that would only add evaluation noise.
    """
    q = symmetric_fold(f)
    out: list[complex] = []
    for x in _aberth(q, tol):
        s = cmath.sqrt(x * x - 4.0)
        # pick the branch that avoids cancellation in x +- s
        if (x.real * s.real + x.imag * s.imag) >= 0.0:
            big = (x + s) / 2.0
        else:
            big = (x - s) / 2.0
        out.append(big)
        out.append(1.0 / big)
    return out


def _certify_real_root(p: IntPoly, r: float, tol: float) -> float:
    """Refine a numerically-real root by bisection on exact integer signs.

    Brackets r between dyadic rationals where p changes sign (expanding the
    bracket geometrically if the float approximation was worse than tol)
    and bisects to width tol * max(1, |r|).  A well-converged root costs
    two exact sign evaluations; an ill-conditioned one is rescued to full
    requested accuracy.
    """
    width = Fraction(tol * max(1.0, abs(r)))
    lo = Fraction(r) - width
    hi = Fraction(r) + width
    s_lo = _sign_at(p, lo)
    s_hi = _sign_at(p, hi)
    if s_lo == 0:
        return float(lo)
    if s_hi == 0:
        return float(hi)
    expansions = 0
    while s_lo == s_hi:
        expansions += 1
        if expansions > 40:
            raise NoConvergenceError(
                f"could not bracket the real root near {r} of {p!r}")
        span = hi - lo
        lo -= span
        hi += span
        s_lo = _sign_at(p, lo)
        s_hi = _sign_at(p, hi)
        if s_lo == 0:
            return float(lo)
        if s_hi == 0:
            return float(hi)
    if expansions == 0:
        return r
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign_at(p, mid)
        if s_mid == 0:
            return float(mid)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def _snap_and_pair(z: list[complex], real_count: int, p: IntPoly,
                   tol: float) -> list[complex]:
    """Snap Sturm-corroborated real zeros onto the axis (certifying each to
    tol by exact bisection) and enforce exact conjugate symmetry on the
    rest."""
    z = sorted(z, key=lambda v: (v.real, v.imag))
    near_real = [v for v in z if abs(v.imag) < REAL_AXIS_SNAP]
    if len(near_real) != real_count:
        raise NoConvergenceError(
            f"numeric real count {len(near_real)} disagrees with exact count "
            f"{real_count} for {p!r}")
    reals = [complex(_certify_real_root(p, float(v.real), tol), 0.0)
             for v in near_real]
    complexes = [complex(v) for v in z if abs(v.imag) >= REAL_AXIS_SNAP]
    uppers = sorted((v for v in complexes if v.imag > 0),
                    key=lambda v: (v.real, v.imag))
    lowers = sorted((v for v in complexes if v.imag < 0),
                    key=lambda v: (v.real, -v.imag))
    if len(uppers) != len(lowers):
        raise NoConvergenceError(f"unpaired complex zeros for {p!r}")
    paired: list[complex] = []
    for u, l in zip(uppers, lowers):
        if abs(u - l.conjugate()) > 1e-6 * max(1.0, abs(u)):
            raise NoConvergenceError(
                f"conjugate pairing failed: {u} vs {l} for {p!r}")
        mean = (u + l.conjugate()) / 2.0
        paired.append(mean)
        paired.append(mean.conjugate())
    return reals + paired


def find_zeros(p: IntPoly, tol: float = 1e-12) -> ZeroSet:
    """Locate every zero of p (with multiplicity) in double precision.

    The polynomial is split into squarefree factors first (so multiple
    zeros never degrade the iteration), any exact root at t = 1 is deflated
    by integer division, and each factor's zeros are cross-checked against
    its exact Sturm real-root count before the set is accepted.
    """
    if p.is_zero():
        raise ZeroPolynomialError("cannot locate zeros of the zero polynomial")
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    if not 1e-15 < tol < 1e-6:
        raise ValueError(f"tol {tol} outside (1e-15, 1e-6)")
    zeros: list[complex] = []
    real_count = 0
    # an exact t^v factor is peeled off first: v zeros at exactly 0,
    # where the relative-residual denominator would otherwise vanish
    valuation = next(i for i, c in enumerate(p.coeffs) if c != 0)
    work = p if valuation == 0 else IntPoly(p.coeffs[valuation:])
    zeros.extend([complex(0.0, 0.0)] * valuation)
    real_count += valuation
    if work.degree == 0:
        residuals = _relative_residuals(p, zeros)
        return ZeroSet(tuple(zeros), residuals, real_count, tol)
    # the Sturm chain of the remainder certifies squarefreeness as a
    # byproduct, so the common case needs no factorization and reuses the
    # chain's real count
    chain = SturmChain.of(work)
    if chain.is_squarefree_certified():
        pieces: list[tuple[IntPoly, int, int]] = [(work, 1, chain.count())]
    else:
        pieces = [(f, k, sturm_real_root_count(f))
                  for f, k in squarefree_decomposition(work)]
    for f, mult, nreal in pieces:
        fac_zeros: list[complex] = []
        if f(1) == 0:
            f = _deflate_at_one(f)
            fac_zeros.append(complex(1.0, 0.0))
            nreal -= 1
        if f.degree >= 1:
            if f.degree % 2 == 0 and f.degree >= 2 and palindrome_sign(f) == 1:
                raw = _palindromic_zeros(f, tol)
            else:
                raw = _aberth(f, tol)
            fac_zeros.extend(
                complex(v) for v in _snap_and_pair(raw, nreal, f, tol))
        n_fac_real = sum(1 for v in fac_zeros if v.imag == 0.0)
        zeros.extend(fac_zeros * mult)
        real_count += mult * n_fac_real
    zeros.sort(key=lambda v: (v.real, v.imag))
    residuals = _relative_residuals(p, zeros)
    if any(r >= RESIDUAL_BOUND for r in residuals):
        raise NoConvergenceError(
            f"residual bound {RESIDUAL_BOUND} violated: {max(residuals)} for {p!r}")
    return ZeroSet(tuple(zeros), residuals, real_count, tol)


def _deflate_at_one(p: IntPoly) -> IntPoly:
    """Exact synthetic division by (t - 1); requires p(1) = 0."""
    out: list[int] = []
    acc = 0
    for c in reversed(p.coeffs):
        acc += c
        out.append(acc)
    if out[-1] != 0:
        raise ValueError("p(1) != 0")
    return IntPoly(tuple(reversed(out[:-1])))


def _relative_residuals(p: IntPoly, zeros: list[complex]) -> tuple[float, ...]:
    """|p(z)| / sum |c_i| |z|^i per zero, on coefficients scaled to unit
    max magnitude."""
    c = [float(v) for v in _float_coeffs(p)]
    crev = c[::-1]
    out = []
    for z in zeros:
        acc = 0j
        for v in crev:
            acc = acc * z + v
        az = abs(z)
        den = 0.0
        for v in crev:
            den = den * az + abs(v)
        out.append(abs(acc) / den if den else abs(acc))
    return tuple(out)


def zero_report(zs: ZeroSet) -> ZeroReport:
    """Extremes of the real parts and the standard location predicates."""
    res = [float(v.real) for v in zs.zeros]
    min_re, max_re = min(res), max(res)
    all_real = all(v.imag == 0.0 for v in zs.zeros)
    pair_tol = max(1e-8, 100.0 * zs.tol)
    return ZeroReport(
        min_re=min_re,
        max_re=max_re,
        hoste_ok=bool(min_re > -1.0),
        thm1_ok=bool(min_re > -3.0 and max_re < 6.0),
        all_real=all_real,
        all_positive_real=bool(all_real and min_re > 0.0),
        reciprocal_paired=_reciprocal_paired(zs.zeros, pair_tol),
    )


def _reciprocal_paired(zeros: tuple[complex, ...], tol: float) -> bool:
    """True when the zero multiset is closed under z -> 1/z."""
    pool = list(zeros)
    for z in zeros:
        if z == 0:
            return False
        target = 1.0 / z
        best, best_dist = None, None
        for i, cand in enumerate(pool):
            d = abs(cand - target)
            if best_dist is None or d < best_dist:
                best, best_dist = i, d
        if best_dist is None or best_dist > tol * max(1.0, abs(target)):
            return False
        pool.pop(best)
    return not pool
