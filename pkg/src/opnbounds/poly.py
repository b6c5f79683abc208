"""Exact integer-coefficient polynomials, cyclotomic values, and the
divisibility check for composed all-ones polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime
from .errors import BudgetExceeded, InvalidInput

# check_proposition refuses degrees beyond this product; keeps sweeps cheap.
PROPOSITION_DEGREE_LIMIT = 20000


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial over the integers, coefficients lowest degree first.

    The zero polynomial is the empty tuple; otherwise the leading
    coefficient is nonzero.
    """

    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "IntPoly":
        return IntPoly.from_list(list(coeffs))

    @staticmethod
    def from_list(coeffs) -> "IntPoly":
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        return IntPoly(tuple(coeffs[:end]))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return IntPoly.from_list(a)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] -= c
        return IntPoly.from_list(a)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly.from_list(out)

    def scale(self, k: int) -> "IntPoly":
        return IntPoly.from_list([k * c for c in self.coeffs])

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(coeffs) -> "IntPoly":
        return IntPoly.from_list([int(c) for c in coeffs])


X = IntPoly((0, 1))
ONE = IntPoly((1,))


def psi(n: int) -> IntPoly:
    """The all-ones polynomial 1 + x + ... + x**(n-1)."""
    if n < 1:
        raise InvalidInput("psi expects n >= 1")
    return IntPoly((1,) * n)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


_CYCLOTOMIC_CACHE: dict[int, IntPoly] = {}


def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by exact division of x**d - 1 by the
    cyclotomic polynomials of the proper divisors of d.  Memoized."""
    if d < 1:
        raise InvalidInput("cyclotomic expects d >= 1")
    cached = _CYCLOTOMIC_CACHE.get(d)
    if cached is not None:
        return cached
    num = IntPoly.from_list([-1] + [0] * (d - 1) + [1])
    for dd in _divisors(d):
        if dd == d:
            continue
        divides, quotient = exact_divides(cyclotomic(dd), num)
        assert divides and quotient is not None
        num = quotient
    _CYCLOTOMIC_CACHE[d] = num
    return num


def compose(outer: IntPoly, inner: IntPoly) -> IntPoly:
    """outer(inner(x)), by Horner's scheme over polynomials."""
    result = IntPoly(())
    for c in reversed(outer.coeffs):
        result = result * inner + IntPoly.of(c)
    return result


def exact_divides(divisor: IntPoly, dividend: IntPoly) -> tuple[bool, IntPoly | None]:
    """Polynomial long division over the rationals.

    Returns (True, quotient) when the remainder vanishes and the quotient is
    integral, (True, None) when it divides over Q only, (False, None)
    otherwise.
    """
    if divisor.is_zero():
        raise InvalidInput("division by the zero polynomial")
    if dividend.is_zero():
        return True, IntPoly(())
    if dividend.degree < divisor.degree:
        return False, None
    rem = [Fraction(c) for c in dividend.coeffs]
    div = [Fraction(c) for c in divisor.coeffs]
    dd = len(div) - 1
    lead = div[-1]
    quot = [Fraction(0)] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        coef = rem[i] / lead
        if coef == 0:
            continue
        quot[i - dd] = coef
        for j in range(dd + 1):
            rem[i - dd + j] -= coef * div[j]
    if any(rem[:dd]):
        return False, None
    if all(q.denominator == 1 for q in quot):
        return True, IntPoly.from_list([int(q) for q in quot])
    return True, None


def eval_at(f: IntPoly, x: int) -> int:
    """Exact evaluation by Horner's scheme."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def check_proposition(t: int, r: int) -> bool:
    """Whether the 2t-th cyclotomic polynomial divides the t-th cyclotomic
    polynomial composed with the all-ones polynomial of length r."""
    return proposition_report(t, r)["divides"]


def proposition_report(t: int, r: int) -> dict:
    """check_proposition plus the congruence diagnostic r == -1 (mod 2t),
    so negative controls are visible in output."""
    if not (is_prime(t) and t % 2 == 1):
        raise InvalidInput("t must be an odd prime")
    if r < 1 or r % 2 == 0:
        raise InvalidInput("r must be a positive odd integer")
    if (t - 1) * (r - 1) > PROPOSITION_DEGREE_LIMIT:
        raise BudgetExceeded(f"degree guard: (t-1)(r-1) > {PROPOSITION_DEGREE_LIMIT}")
    composed = compose(cyclotomic(t), psi(r))
    divides, _ = exact_divides(cyclotomic(2 * t), composed)
    return {
        "t": t,
        "r": r,
        "congruent": r % (2 * t) == 2 * t - 1,
        "divides": divides,
    }
