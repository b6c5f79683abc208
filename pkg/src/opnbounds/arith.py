"""Integer primality, factorization and root extraction on exact values.

All quantities are Python ints (arbitrary precision) and
``fractions.Fraction`` (always stored in lowest terms with a positive
denominator).  Decimal strings encode integers in JSON output; rationals are
encoded as ``"p/q"`` (or just ``"p"`` when the denominator is 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, InvalidInput

# Miller-Rabin with this witness set is deterministic for all n below
# DETERMINISTIC_LIMIT (Sorenson & Webster), which comfortably covers 2**64.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_LIMIT = 3317044064679887385961981
# Extra fixed-seed rounds applied above the deterministic range.
PROBABLE_PRIME_ROUNDS = 24

DEFAULT_TRIAL_BOUND = 1000
DEFAULT_BUDGET = 10**8

_SIEVE_CACHE: dict[int, list[int]] = {}


def primes_below(limit: int) -> list[int]:
    """All primes < limit, via a cached sieve of Eratosthenes."""
    cached = _SIEVE_CACHE.get(limit)
    if cached is not None:
        return cached
    sieve = bytearray([1]) * limit
    if limit > 0:
        sieve[0:1] = b"\x00"
    if limit > 1:
        sieve[1:2] = b"\x00"
    for p in range(2, math.isqrt(limit - 1) + 1 if limit > 1 else 2):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    primes = [i for i in range(limit) if sieve[i]]
    _SIEVE_CACHE[limit] = primes
    return primes


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test: deterministic below DETERMINISTIC_LIMIT (> 2**64),
    a fixed-seed probable-prime test with PROBABLE_PRIME_ROUNDS extra rounds
    above it (see primality_caveat)."""
    if n < 0:
        raise InvalidInput("is_prime expects n >= 0")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if not _miller_rabin(n, _WITNESSES):
        return False
    if n < DETERMINISTIC_LIMIT:
        return True
    # Deterministically seeded extra bases; result is reproducible but only
    # "probable prime" in the strict sense.
    import random

    rng = random.Random(n)
    extra = [rng.randrange(2, n - 1) for _ in range(PROBABLE_PRIME_ROUNDS)]
    return _miller_rabin(n, extra)


def primality_caveat(n: int) -> str | None:
    """Report string for results that relied on the probabilistic range."""
    if n < DETERMINISTIC_LIMIT:
        return None
    return (
        f"probable prime: {n} exceeds the deterministic witness range "
        f"({DETERMINISTIC_LIMIT}); tested with {PROBABLE_PRIME_ROUNDS} "
        "additional fixed-seed rounds"
    )


def isqrt(n: int) -> tuple[int, bool]:
    """floor(sqrt(n)) and whether n is a perfect square."""
    if n < 0:
        raise InvalidInput("isqrt expects n >= 0")
    r = math.isqrt(n)
    return r, r * r == n


def quadratic_integer_roots(a: int, b: int, c: int) -> list[int]:
    """All nonnegative integer solutions of a*x**2 + b*x + c = 0, ascending.

    Exact throughout: discriminant square test via isqrt, no floats.
    """
    if a == 0:
        raise InvalidInput("leading coefficient must be nonzero")
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r, exact = isqrt(disc)
    if not exact:
        return []
    roots = set()
    for s in (r, -r):
        num = -b + s
        if num % (2 * a) == 0:
            x = num // (2 * a)
            if x >= 0 and a * x * x + b * x + c == 0:
                roots.add(x)
    return sorted(roots)


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its complete prime factorization.

    factors is sorted by prime, ascending; the empty tuple represents 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        prev = 0
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise InvalidInput("factors must be ascending primes with positive exponents")
            prev = p
            prod *= p**e
        if prod != self.value:
            raise InvalidInput("factor product does not equal value")

    @property
    def big_omega(self) -> int:
        """Total number of prime factors, with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def with_multiplicity(self) -> list[int]:
        """Prime factors repeated by multiplicity, ascending."""
        out = []
        for p, e in self.factors:
            out.extend([p] * e)
        return out

    def to_json(self) -> dict:
        return {
            "value": str(self.value),
            "factors": [[str(p), e] for p, e in self.factors],
        }


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self, steps: int) -> None:
        self.left -= steps
        if self.left < 0:
            raise BudgetExceeded("factoring work budget exhausted")


def _brent_rho(n: int, budget: _Budget) -> int:
    """A nontrivial factor of composite n (Brent's cycle-finding variant).

    Deterministic: polynomial offsets are tried in a fixed order.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget.spend(min(m, r - k))
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                budget.spend(1)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise BudgetExceeded(f"rho failed to split {n}")


def factor(
    n: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    budget: int = DEFAULT_BUDGET,
) -> FactoredInteger:
    """Complete prime factorization: trial division below trial_bound, then
    Brent's rho on what remains.  Raises BudgetExceeded rather than ever
    returning a partial factorization."""
    if n < 1:
        raise InvalidInput("factor expects n >= 1")
    tracker = _Budget(budget)
    found: dict[int, int] = {}
    m = n
    for p in primes_below(trial_bound):
        if p * p > m:
            break
        tracker.spend(1)
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    if m > 1:
        stack = [m]
        while stack:
            x = stack.pop()
            if is_prime(x):
                found[x] = found.get(x, 0) + 1
                continue
            d = _brent_rho(x, tracker)
            stack.append(d)
            stack.append(x // d)
    return FactoredInteger(n, tuple(sorted(found.items())))


def rational_to_str(q: Fraction) -> str:
    """Canonical "p/q" encoding; integral values render without "/1"."""
    return str(q)


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)
