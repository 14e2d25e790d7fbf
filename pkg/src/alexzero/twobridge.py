"""Two-bridge fractions and their even continued-fraction words.

A reduced fraction 0 < beta/alpha < 1 with exactly one of alpha, beta even
has a unique expansion beta/alpha = [2a_1, 2a_2, ..., 2a_m] as an even
(negative) continued fraction.  CFWord stores the half-coefficients a_i;
they drive every matrix and certificate in the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "CFWord",
    "Classification",
    "NotReducedError",
    "OutOfRangeError",
    "ParityError",
    "normalize_fraction",
    "even_cf_expand",
    "cf_to_fraction",
    "classify",
    "sign_runs",
]


class NotReducedError(ValueError):
    """Fraction is not in lowest terms."""


class OutOfRangeError(ValueError):
    """Fraction does not satisfy 0 < beta < alpha."""


class ParityError(ValueError):
    """Both numerator and denominator are odd, so no even expansion exists."""


@dataclass(frozen=True)
class CFWord:
    """Half-coefficients (a_1, ..., a_m) of the even continued fraction
    [2a_1, ..., 2a_m]; every entry is a nonzero signed integer."""

    a: tuple[int, ...]

    def __init__(self, a):
        entries = tuple(int(v) for v in a)
        if not entries:
            raise ValueError("word must have at least one entry")
        if any(v == 0 for v in entries):
            raise ValueError("word entries must be nonzero")
        object.__setattr__(self, "a", entries)

    @classmethod
    def parse(cls, text: str) -> "CFWord":
        """Parse the serialized form, e.g. '1,-1,2'."""
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad CF word {text!r}") from exc

    @property
    def m(self) -> int:
        return len(self.a)

    def __len__(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def __getitem__(self, i: int) -> int:
        return self.a[i]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.a)

    def signs(self) -> tuple[int, ...]:
        return tuple(1 if v > 0 else -1 for v in self.a)

    def magnitudes(self) -> tuple[int, ...]:
        return tuple(abs(v) for v in self.a)


@dataclass(frozen=True)
class Classification:
    """Structural flags read directly off a CF word."""

    is_knot: bool
    is_link: bool
    special_alternating: bool
    fibered: bool
    alternating_diagram: bool
    thm2_applicable: bool
    thm3_applicable: bool
    thm3_strong: bool
    thm4_applicable: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "is_knot": self.is_knot,
            "is_link": self.is_link,
            "special_alternating": self.special_alternating,
            "fibered": self.fibered,
            "alternating_diagram": self.alternating_diagram,
            "thm2_applicable": self.thm2_applicable,
            "thm3_applicable": self.thm3_applicable,
            "thm3_strong": self.thm3_strong,
            "thm4_applicable": self.thm4_applicable,
        }


def _check_fraction(beta: int, alpha: int) -> None:
    if not 0 < beta < alpha:
        raise OutOfRangeError(f"need 0 < beta < alpha, got {beta}/{alpha}")
    if gcd(beta, alpha) != 1:
        raise NotReducedError(f"{beta}/{alpha} is not reduced")


def normalize_fraction(beta: int, alpha: int) -> tuple[int, int]:
    """Ensure one of beta, alpha is even.

    When both are odd, returns (alpha - beta, alpha): the mirror-image knot,
    whose Alexander polynomial has the same zero set.
    """
    _check_fraction(beta, alpha)
    if beta % 2 == 0 or alpha % 2 == 0:
        return beta, alpha
    return alpha - beta, alpha


def even_cf_expand(beta: int, alpha: int) -> CFWord:
    """Expand beta/alpha into its unique even continued-fraction word.

    Requires exactly one of beta, alpha even (run normalize_fraction first);
    at each step the unique even integer 2a with |2a - 1/v| < 1 is taken and
    the tail v' = 2a - 1/v recursed on until it vanishes.
    """
    _check_fraction(beta, alpha)
    if beta % 2 == alpha % 2:
        raise ParityError(f"both {beta} and {alpha} are odd")
    word: list[int] = []
    v = Fraction(beta, alpha)
    while v != 0:
        inv = 1 / v
        # nearest integer to inv/2; a tie would mean inv is an odd integer
        half = inv / 2
        a = (half.numerator * 2 + half.denominator) // (2 * half.denominator)
        if abs(2 * a - inv) >= 1:
            raise ParityError(f"no even integer within 1 of {inv}")
        if a == 0:
            raise AssertionError("even partial quotient vanished")
        word.append(a)
        v = 2 * a - inv
    return CFWord(tuple(word))


def cf_to_fraction(w: CFWord) -> tuple[int, int]:
    """Evaluate the even continued fraction bottom-up in exact rationals.

    Returns the reduced (beta, alpha) with alpha > 0; for words produced by
    even_cf_expand the value lies in (0, 1).
    """
    val = Fraction(0)
    for a in reversed(w.a):
        den = 2 * a - val
        if den == 0:
            raise ZeroDivisionError("continued fraction tail hit a zero denominator")
        val = 1 / den
    return val.numerator, val.denominator


def sign_runs(w: CFWord) -> tuple[int, ...]:
    """Lengths of the maximal runs of equal-sign entries."""
    runs = [1]
    signs = w.signs()
    for prev, cur in zip(signs, signs[1:]):
        if cur == prev:
            runs[-1] += 1
        else:
            runs.append(1)
    return tuple(runs)


def classify(w: CFWord) -> Classification:
    """Structural facts about K(r) read off the word.

    All flags are simple scans: a knot needs m even (m odd gives a
    two-component link); special alternating means one sign throughout;
    fibered means all |a_i| = 1; the diagram is alternating exactly when
    adjacent entries alternate in sign.
    """
    a = w.a
    m = len(a)
    adjacent = list(zip(a, a[1:]))
    special = all(v > 0 for v in a) or all(v < 0 for v in a)
    fibered = all(abs(v) == 1 for v in a)
    alternating = all(x * y < 0 for x, y in adjacent)
    thm3 = all(x * y != 1 for x, y in adjacent)
    thm3_strong = thm3 and all(abs(v) > 1 for v in a)
    thm4 = fibered and all(r <= 2 for r in sign_runs(w))
    return Classification(
        is_knot=m % 2 == 0,
        is_link=m % 2 == 1,
        special_alternating=special,
        fibered=fibered,
        alternating_diagram=alternating,
        thm2_applicable=alternating,
        thm3_applicable=thm3,
        thm3_strong=thm3_strong,
        thm4_applicable=thm4,
    )
