"""The alternating constant-magnitude family r(m, c) = [2c, -2c, ...].

Its Alexander polynomials P_m satisfy P_m = c(t-1)P_{m-1} - tP_{m-2}, and a
chain of exact substitutions (t -> x = t + 1/t -> y = c^2 x - (2c^2 + 2))
turns the even-index subfamily into a Chebyshev-style recurrence lambda/mu
whose zeros are plain cosines.  That chain pins every zero of P_2m and Q_2m
inside ((sqrt(1+c^2) -+ 1)/c)^2 and yields the extremal-zero search used to
show the upper strip bound 6 is sharp among integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactmath import IntPoly, symmetric_unfold
from .roots import find_zeros
from .twobridge import CFWord

__all__ = [
    "OddIndexError",
    "FamilyReport",
    "family_cf",
    "p_poly",
    "q_poly",
    "lambda_mu_polys",
    "fibonacci_poly",
    "theorem5_verify",
    "remark2_extremal",
]

COSINE_TOL = 1e-10


class OddIndexError(ValueError):
    """q_poly is only defined for even indices."""


def family_cf(m: int, c: int) -> CFWord:
    """The word [c, -c, c, ...] of length m (half-coefficients)."""
    if m < 1 or c < 1:
        raise ValueError("need m >= 1 and c >= 1")
    return CFWord(tuple(c if i % 2 == 0 else -c for i in range(m)))


def p_poly(m: int, c: int) -> IntPoly:
    """P_m: P_0 = 1, P_1 = c(t-1), P_m = c(t-1)P_{m-1} - tP_{m-2}.

    Equals the Alexander polynomial of family_cf(m, c) up to sign
    (-1)^floor(m/2)."""
    if m < 0 or c < 1:
        raise ValueError("need m >= 0 and c >= 1")
    t_minus_1 = IntPoly((-1, 1))
    t = IntPoly((0, 1))
    prev, cur = IntPoly.one(), c * t_minus_1
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, c * (t_minus_1 * cur) - t * prev
    return cur


def q_poly(index: int, c: int) -> IntPoly:
    """Q_{2m}: Q_0 = c, Q_{2m} = c P_{2m} - t Q_{2m-2}.

    Satisfies P_{2m+1} = (t-1) Q_{2m} exactly."""
    if index < 0 or index % 2 != 0:
        raise OddIndexError(f"index must be even and >= 0, got {index}")
    if c < 1:
        raise ValueError("need c >= 1")
    t = IntPoly((0, 1))
    q = IntPoly((c,))
    for m in range(1, index // 2 + 1):
        q = c * p_poly(2 * m, c) - t * q
    return q


def lambda_mu_polys(m: int, c: int) -> tuple[IntPoly, IntPoly]:
    """(lambda_m, mu_m) in the variable y, by the shared recurrence
    f_m = y f_{m-1} - f_{m-2} with seeds lambda: 1, y+1 and mu: c, cy.

    c * lambda_m = mu_m + mu_{m-1}, and substituting y = c^2 x - (2c^2+2),
    x = t + 1/t turns t^m lambda_m into P_{2m}."""
    if m < 0 or c < 1:
        raise ValueError("need m >= 0 and c >= 1")
    y = IntPoly((0, 1))
    lam_prev, lam = IntPoly.one(), IntPoly((1, 1))
    mu_prev, mu = IntPoly((c,)), IntPoly((0, c))
    if m == 0:
        return lam_prev, mu_prev
    for _ in range(m - 1):
        lam_prev, lam = lam, y * lam - lam_prev
        mu_prev, mu = mu, y * mu - mu_prev
    return lam, mu


def fibonacci_poly(n: int) -> IntPoly:
    """Fibonacci polynomial: f_1 = 1, f_2 = y, f_n = y f_{n-1} + f_{n-2}."""
    if n < 1:
        raise ValueError("need n >= 1")
    y = IntPoly((0, 1))
    prev, cur = IntPoly.one(), y
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, y * cur + prev
    return cur


def fibonacci_rotated(n: int) -> IntPoly:
    """i^(1-n) f_n(i y) expanded as an exact integer polynomial.

    f_n has coefficients only in degrees of parity n - 1, so every surviving
    power of i is real: the coefficient of y^k picks up (-1)^((n-1-k)/2).
    Equals mu_{n-1} / c."""
    f = fibonacci_poly(n)
    m = n - 1  # matching mu index
    out = [0] * (f.degree + 1)
    for k, coeff in enumerate(f.coeffs):
        if coeff == 0:
            continue
        if (m - k) % 2 != 0:
            raise AssertionError("Fibonacci polynomial broke parity")
        out[k] = coeff * (-1) ** (((m - k) // 2) % 2)
    return IntPoly(out)


@dataclass(frozen=True)
class FamilyBounds:
    """Open interval ((sqrt(1+c^2)-1)/c)^2 < t < ((sqrt(1+c^2)+1)/c)^2
    containing every zero of P_2m and Q_2m; the endpoints are reciprocal."""

    lower_expr: str
    upper_expr: str
    lower: float
    upper: float


@dataclass(frozen=True)
class FamilyReport:
    """Everything theorem5_verify measures for one (m, c)."""

    m: int
    c: int
    P: IntPoly
    Q: IntPoly
    lambda_: IntPoly
    mu: IntPoly
    bounds: FamilyBounds
    checks: dict[str, bool]

    @property
    def all_ok(self) -> bool:
        return all(self.checks.values())

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "c": self.c,
            "bounds": {
                "lower": {"expression": self.bounds.lower_expr,
                          "value": self.bounds.lower},
                "upper": {"expression": self.bounds.upper_expr,
                          "value": self.bounds.upper},
            },
            "checks": dict(self.checks),
        }


def _family_bounds(c: int) -> FamilyBounds:
    root = math.sqrt(1.0 + c * c)
    return FamilyBounds(
        lower_expr=f"((sqrt(1+{c}^2)-1)/{c})^2",
        upper_expr=f"((sqrt(1+{c}^2)+1)/{c})^2",
        lower=((root - 1.0) / c) ** 2,
        upper=((root + 1.0) / c) ** 2,
    )


def _identity_chain_ok(m: int, c: int) -> bool:
    """The exact relations tying P, Q, lambda, mu and the Fibonacci
    polynomials together."""
    t_minus_1 = IntPoly((-1, 1))
    if p_poly(2 * m + 1, c) != t_minus_1 * q_poly(2 * m, c):
        return False
    lam, mu = lambda_mu_polys(m, c)
    _, mu_prev = lambda_mu_polys(m - 1, c) if m >= 1 else (None, None)
    if m >= 1 and c * lam != mu + mu_prev:
        return False
    # t^m lambda_m(c^2 (t + 1/t) - (2c^2+2)) = P_2m(t)
    lam_in_x = lam.compose_linear(c * c, -(2 * c * c + 2))
    if symmetric_unfold(lam_in_x) != p_poly(2 * m, c):
        return False
    if c * fibonacci_rotated(m + 1) != mu:
        return False
    return True


def _cosine_zero_checks(m: int, c: int) -> tuple[bool, bool]:
    """(zeros of mu_m match 2cos(k pi/(m+1)), consecutive mu zero sets
    strictly interlace)."""
    _, mu = lambda_mu_polys(m, c)
    zs = sorted(v.real for v in find_zeros(mu).zeros)
    expected = sorted(2.0 * math.cos(k * math.pi / (m + 1))
                      for k in range(1, m + 1))
    cos_ok = len(zs) == m and all(
        abs(a - b) < COSINE_TOL for a, b in zip(zs, expected))
    if m < 2:
        return cos_ok, True
    _, mu_prev = lambda_mu_polys(m - 1, c)
    prev = sorted((v.real for v in find_zeros(mu_prev).zeros), reverse=True)
    cur = sorted(zs, reverse=True)
    inter_ok = all(
        cur[k] > prev[k] > cur[k + 1] for k in range(m - 1))
    return cos_ok, inter_ok


def _mu_boundary_ok(m: int, c: int) -> bool:
    """mu_k(-2) alternates as (-1)^k (k+1) c; checked exactly for k <= m."""
    for k in range(m + 1):
        _, mu = lambda_mu_polys(k, c)
        if mu(-2) != (-1) ** k * (k + 1) * c:
            return False
    return True


def _zeros_in_bounds_ok(m: int, c: int, bounds: FamilyBounds) -> bool:
    for poly in (p_poly(2 * m, c), q_poly(2 * m, c)):
        for z in find_zeros(poly).zeros:
            if z.imag != 0.0:
                return False
            if not bounds.lower < z.real < bounds.upper:
                return False
    return True


def theorem5_verify(m: int, c: int) -> FamilyReport:
    """Run every family check for r(m, c) and report the results.

    Covers: the exact identity chain, the cosine formula for the zeros of
    mu_m (tolerance 1e-10), strict interlacing of consecutive mu zero sets,
    the exact boundary values mu_k(-2), and strict containment of all
    P_2m / Q_2m zeros in the family bounds.
    """
    if m < 1 or c < 1:
        raise ValueError("need m >= 1 and c >= 1")
    lam, mu = lambda_mu_polys(m, c)
    bounds = _family_bounds(c)
    cos_ok, inter_ok = _cosine_zero_checks(m, c)
    checks = {
        "identity_chain": _identity_chain_ok(m, c),
        "cosine_zeros": cos_ok,
        "interlacing": inter_ok,
        "mu_at_minus2": _mu_boundary_ok(m, c),
        "zeros_in_bounds": _zeros_in_bounds_ok(m, c, bounds),
    }
    return FamilyReport(m=m, c=c, P=p_poly(2 * m, c), Q=q_poly(2 * m, c),
                        lambda_=lam, mu=mu, bounds=bounds, checks=checks)


def _lambda_at(m: int, y: float) -> float:
    """lambda_m(y) by the three-term recurrence; stable for |y| <= 2."""
    prev, cur = 1.0, y + 1.0
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, y * cur - prev
    return cur


def remark2_extremal(m: int) -> float:
    """Largest real zero of P_2m for c = 1.

    The largest zero of lambda_m lies in (2cos(2 pi/(m+1)), 2) and is the
    only one there (lambda_m is negative at the left endpoint and positive
    at 2), so a bisection on the recurrence evaluation isolates it; mapping
    y -> x = y + 4 -> t = (x + sqrt(x^2-4))/2 gives the zero of P_2m.  The
    values increase with m and stay below 3 + sqrt(8).
    """
    if m < 1:
        raise ValueError("need m >= 1")
    lo = 2.0 * math.cos(2.0 * math.pi / (m + 1))
    hi = 2.0
    flo = _lambda_at(m, lo)
    if not flo < 0.0 < _lambda_at(m, hi):
        raise AssertionError("bisection bracket failed")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if _lambda_at(m, mid) < 0.0:
            lo = mid
        else:
            hi = mid
    y = 0.5 * (lo + hi)
    x = y + 4.0
    return (x + math.sqrt(x * x - 4.0)) / 2.0
