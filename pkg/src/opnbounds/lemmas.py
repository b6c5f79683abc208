"""Brute-force sweeps over the quadratic-form factorization lemmas, the
linked-prime census, and the shared-largest-prime collision search.

Every verifier is exhaustive over its hypothesis space up to the bound.
Bounds constrain the "squared side" integers m whose value m**2 + m + 1 is
being factored; primes derived from those values are followed wherever they
land.  Sweeps partition the outer loop into contiguous chunks for the
optional worker pool and merge results by sorting.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .arith import factor, is_prime, primes_below, quadratic_integer_roots
from .contribution import linked_prime_of, sigma_pe
from .errors import InvalidInput

WITNESS_CAP = 100

NONEXISTENCE_IDS = (
    "ZP2",
    "U_S1S2",
    "SEMI_S31",
    "SEMI_S22S31",
    "U_S1S31",
    "U_S21S31",
    "SMALL",
)


def sigma2(m: int) -> int:
    return m * m + m + 1


@dataclass
class SearchReport:
    lemma_id: str
    bound: int
    tuples_examined: int
    counterexamples: list[tuple]
    witnesses: list[tuple]
    elapsed: float
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "bound": str(self.bound),
            "tuples_examined": self.tuples_examined,
            "counterexamples": [[str(x) for x in t] for t in self.counterexamples],
            "witnesses": [[str(x) for x in t] for t in self.witnesses],
            "elapsed": self.elapsed,
            "notes": list(self.notes),
            "passed": self.passed,
        }


@dataclass
class FiberReport:
    q: int
    members: list[tuple[int, str, bool]]  # (p, class tag, smaller-prime rule fired)
    violations: list[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.members)

    def pattern_sizes(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for _, tag, exceptional in self.members:
            pattern = f"{tag}:{'smaller' if exceptional else 'largest'}"
            out[pattern] = out.get(pattern, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "q": str(self.q),
            "members": [
                {"p": str(p), "class": tag, "smaller_rule": exc}
                for p, tag, exc in self.members
            ],
            "pattern_sizes": self.pattern_sizes(),
            "violations": list(self.violations),
        }


# ---------------------------------------------------------------------------
# Factorization index for m**2 + m + 1, m <= bound.


class SigmaIndex:
    """Factorizations of m**2 + m + 1 for 1 <= m <= bound, plus the reverse
    map from each prime divisor to the m it divides into."""

    def __init__(self, bound: int, facs: dict[int, tuple[tuple[int, int], ...]]):
        self.bound = bound
        self.facs = facs
        self.prime_set = frozenset(primes_below(bound + 1))
        by_prime: dict[int, list[int]] = {}
        for m in range(1, bound + 1):
            for p, _ in facs[m]:
                by_prime.setdefault(p, []).append(m)
        self.by_prime = by_prime

    def members(self, q: int) -> list[int]:
        return self.by_prime.get(q, [])

    def is_src_prime(self, m: int) -> bool:
        return m in self.prime_set


def _factor_range(lo: int, hi: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    return [(m, factor(sigma2(m)).factors) for m in range(lo, hi)]


def _chunk_ranges(lo: int, hi: int, k: int) -> list[tuple[int, int]]:
    span = hi - lo
    k = max(1, min(k, span)) if span > 0 else 1
    step = -(-span // k)
    return [(s, min(s + step, hi)) for s in range(lo, hi, step)]


def _pool_starmap(fn, argses, jobs):
    if jobs <= 1 or len(argses) <= 1:
        return [fn(*a) for a in argses]
    import multiprocessing

    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(jobs) as pool:
        return pool.starmap(fn, argses)


_INDEX_CACHE: dict[int, SigmaIndex] = {}


def get_index(bound: int, jobs: int = 1) -> SigmaIndex:
    idx = _INDEX_CACHE.get(bound)
    if idx is None:
        facs: dict[int, tuple] = {}
        for part in _pool_starmap(
            _factor_range, _chunk_ranges(1, bound + 1, jobs * 4), jobs
        ):
            facs.update(part)
        idx = SigmaIndex(bound, facs)
        _INDEX_CACHE[bound] = idx
    return idx


# ---------------------------------------------------------------------------
# Conclusion predicates, split out so tests can inject a broken one and
# confirm the sweeps actually visit the hypothesis space.


def _f1_conclusion(a, b, c, d, e) -> bool:
    return c == a + b + 1 and a - b == d - e


def _f2_conclusion(a, b, d, e, f) -> bool:
    return d == a + b + 1 and a - b == 3 * e - f


def _f3_conclusion(a, b, d, e, f) -> bool:
    return 3 * d == a + b + 1 and a - b == e - f


def _zp1_conclusion(a, b) -> bool:
    return a == b * b


def _simplifying_conclusion(a, b, c, d) -> bool:
    return b * b * d > a * a


def _finish(lemma_id, bound, examined, cex, wits, t0, notes=()) -> SearchReport:
    cex.sort()
    wits.sort()
    return SearchReport(
        lemma_id=lemma_id,
        bound=bound,
        tuples_examined=examined,
        counterexamples=cex,
        witnesses=wits[:WITNESS_CAP],
        elapsed=time.perf_counter() - t0,
        notes=list(notes),
    )


def verify_factorization_identity(which: str, bound: int, jobs: int = 1) -> SearchReport:
    """Exhaustively check the shared-prime factorization identities F1-F3."""
    if bound < 10:
        raise InvalidInput("bound must be at least 10")
    if which not in ("F1", "F2", "F3"):
        raise InvalidInput(f"unknown identity {which}")
    t0 = time.perf_counter()
    idx = get_index(bound, jobs)
    examined = 0
    cex: list[tuple] = []
    wits: list[tuple] = []

    if which == "F1":
        # a^2+a+1 = c*d, b^2+b+1 = c*e, c prime, c > d > e >= 1.
        for c, members in idx.by_prime.items():
            larger = [m for m in members if sigma2(m) // c < c]
            for a in larger:
                d = sigma2(a) // c
                for b in members:
                    if b >= a:
                        break
                    e = sigma2(b) // c
                    if e >= d:
                        continue
                    examined += 1
                    tup = (a, b, c, d, e)
                    (wits if _f1_conclusion(*tup) else cex).append(tup)
    elif which == "F2":
        # a^2+a+1 = 3*d*e, b^2+b+1 = d*f, a,b,d prime, d > e > f >= 1.
        for d, members in idx.by_prime.items():
            left = [
                m
                for m in members
                if idx.is_src_prime(m)
                and sigma2(m) % (3 * d) == 0
                and sigma2(m) // (3 * d) < d
            ]
            right = [
                m for m in members if idx.is_src_prime(m) and sigma2(m) // d < d
            ]
            for a in left:
                e = sigma2(a) // (3 * d)
                for b in right:
                    f = sigma2(b) // d
                    if f >= e:
                        continue
                    examined += 1
                    tup = (a, b, d, e, f)
                    (wits if _f2_conclusion(*tup) else cex).append(tup)
    else:
        # a^2+a+1 = 3*d*e, b^2+b+1 = 3*d*f, a,b,d prime, d >= e > f >= 1.
        for d, members in idx.by_prime.items():
            pool = [
                m
                for m in members
                if idx.is_src_prime(m)
                and sigma2(m) % (3 * d) == 0
                and sigma2(m) // (3 * d) <= d
            ]
            for i, a in enumerate(pool):
                e = sigma2(a) // (3 * d)
                for b in pool[:i]:
                    f = sigma2(b) // (3 * d)
                    examined += 1
                    tup = (a, b, d, e, f)
                    (wits if _f3_conclusion(*tup) else cex).append(tup)
    return _finish(f"Factorization{which[1]}", bound, examined, cex, wits, t0)


def verify_zelproof1(bound: int, jobs: int = 1) -> SearchReport:
    """a^2+a+1 = c*d with b^2+b+1 = c prime and c > d > 1 forces a = b^2."""
    if bound < 10:
        raise InvalidInput("bound must be at least 10")
    t0 = time.perf_counter()
    idx = get_index(bound, jobs)
    examined = 0
    cex: list[tuple] = []
    wits: list[tuple] = []
    for b in range(1, bound + 1):
        c = sigma2(b)
        members = idx.by_prime.get(c)
        if members is None:  # c is composite: no key was created for it
            continue
        for a in members:
            d = sigma2(a) // c
            if 1 < d < c:
                examined += 1
                tup = (a, b, c, d)
                (wits if _zp1_conclusion(a, b) else cex).append(tup)
    return _finish("ZelProof1", bound, examined, cex, wits, t0)


def _two_distinct_odd_primes(fac) -> tuple[int, int] | None:
    """(smaller, larger) when the factored value is a product of two
    distinct primes to the first power."""
    if len(fac) == 2 and fac[0][1] == 1 and fac[1][1] == 1:
        return fac[0][0], fac[1][0]
    return None


def verify_nonexistence(which: str, bound: int, jobs: int = 1) -> SearchReport:
    """Exhaustively confirm that a lemma's forbidden prime configuration has
    no instance with sources up to the bound."""
    if bound < 10:
        raise InvalidInput("bound must be at least 10")
    if which not in NONEXISTENCE_IDS:
        raise InvalidInput(f"unknown nonexistence lemma {which}")
    t0 = time.perf_counter()
    idx = get_index(bound, jobs)
    examined = 0
    cex: list[tuple] = []
    wits: list[tuple] = []
    src = idx.is_src_prime

    if which == "ZP2":
        # a^2+a+1 = c*d, b^2+b+1 = c*f; a,b,c,d,f odd primes > 3, c > d > f.
        for c, members in idx.by_prime.items():
            pool = []
            for m in members:
                if m > 3 and src(m):
                    pair = _two_distinct_odd_primes(idx.facs[m])
                    if pair is not None and pair[1] == c and pair[0] > 3:
                        pool.append((m, pair[0]))
            for i, (a, d) in enumerate(pool):
                for b, f in pool[:i]:
                    if f < d:
                        examined += 1
                        cex.append((a, b, c, d, f))
    elif which == "U_S1S2":
        # Hypothesis: a^2+a+1 = c*d (c > d odd primes, d != 3) and some prime
        # b with b^2+b+1 = 3*c.  Forbidden: prime g with g^2+g+1 = d*h,
        # d > h, h = 1 or an odd prime.
        for a in primes_below(bound + 1):
            if a < 3:
                continue
            pair = _two_distinct_odd_primes(idx.facs.get(a, ()))
            if pair is None or pair[0] == 3:
                continue
            d, c = pair
            b = _prime_root(3 * c)
            if b is None:
                continue
            found = False
            for g in idx.members(d):
                if g <= 2 or not src(g):
                    continue
                h = sigma2(g) // d
                if h < d and (h == 1 or (h > 2 and is_prime(h))):
                    found = True
                    cex.append((a, b, c, d, g, h))
            examined += 1
            if not found:
                wits.append((a, b, c, d))
    elif which == "SEMI_S31":
        # Three primes sharing 3*d: cofactors d >= e > f > g, all seven
        # values distinct odd primes.
        for d, members in idx.by_prime.items():
            pool = []
            for m in members:
                if m > 2 and src(m) and sigma2(m) % (3 * d) == 0:
                    cof = sigma2(m) // (3 * d)
                    if 2 < cof <= d and is_prime(cof):
                        pool.append((m, cof))
            for i in range(len(pool)):
                for j in range(i):
                    for k in range(j):
                        a, e = pool[i]
                        b, f = pool[j]
                        c2, g = pool[k]
                        examined += 1
                        if len({a, b, c2, d, e, f, g}) == 7:
                            cex.append((a, b, c2, d, e, f, g))
    elif which == "SEMI_S22S31":
        # a,b share 3*d with cofactors e != f; c has c^2+c+1 = d*g; all odd
        # primes with d >= e, f, g.
        for d, members in idx.by_prime.items():
            with3 = []
            plain = []
            for m in members:
                if m <= 2 or not src(m):
                    continue
                n = sigma2(m)
                if n % (3 * d) == 0:
                    cof = n // (3 * d)
                    if 2 < cof <= d and is_prime(cof):
                        with3.append((m, cof))
                else:
                    cof = n // d
                    if 2 < cof <= d and is_prime(cof):
                        plain.append((m, cof))
            if not plain:
                continue
            for i, (a, e) in enumerate(with3):
                for b, f in with3[:i]:
                    for c2, g in plain:
                        examined += 1
                        cex.append((a, b, c2, d, e, f, g))
    elif which == "U_S1S31":
        # b^2+b+1 = d prime; forbidden prime a with a^2+a+1 = 3*d*e, e <= d.
        for b in primes_below(bound + 1):
            if b == 2:
                continue
            d = sigma2(b)
            for a in idx.by_prime.get(d, ()):
                if a == b or a <= 2 or not src(a):
                    continue
                n = sigma2(a)
                if n % (3 * d) == 0:
                    e = n // (3 * d)
                    if 2 < e <= d and is_prime(e):
                        cex.append((a, b, d, e))
                examined += 1
    elif which == "U_S21S31":
        # b^2+b+1 = 3*d, d prime; forbidden prime a with a^2+a+1 = 3*d*e,
        # e <= d.
        for b in primes_below(bound + 1):
            n = sigma2(b)
            if b == 2 or n % 3 != 0:
                continue
            d = n // 3
            for a in idx.by_prime.get(d, ()):
                if a <= 2 or not src(a):
                    continue
                na = sigma2(a)
                if na % (3 * d) == 0:
                    e = na // (3 * d)
                    if 2 < e <= d and is_prime(e):
                        cex.append((a, b, d, e))
                examined += 1
    else:  # SMALL
        # a^2+a+1 = d*f (d > f > 3 odd primes) with b^2+b+1 = 3*d for prime
        # b; forbidden prime c with c^2+c+1 = 3*f*g, g an odd prime < f.
        for a in primes_below(bound + 1):
            if a < 3:
                continue
            pair = _two_distinct_odd_primes(idx.facs.get(a, ()))
            if pair is None or pair[0] <= 3:
                continue
            f, d = pair
            b = _prime_root(3 * d)
            if b is None:
                continue
            found = False
            for c2 in idx.members(f):
                if c2 <= 2 or not src(c2):
                    continue
                n = sigma2(c2)
                if n % (3 * f) == 0:
                    g = n // (3 * f)
                    if 2 < g < f and is_prime(g):
                        found = True
                        cex.append((a, b, c2, d, f, g))
            examined += 1
            if not found:
                wits.append((a, b, d, f))
    return _finish(which, bound, examined, cex, wits, t0)


def _prime_root(n: int) -> int | None:
    """The prime b with b^2 + b + 1 == n, when it exists."""
    for b in quadratic_integer_roots(1, 1, 1 - n):
        if is_prime(b):
            return b
    return None


def _divisor_triples(fac):
    """All ordered triples (b, c, d) with b*c*d equal to the factored value."""
    pairs = [(1, 1)]
    for p, e in fac:
        nxt = []
        for i in range(e + 1):
            for j in range(e + 1 - i):
                pi, pj = p**i, p**j
                nxt.extend((x * pi, y * pj) for x, y in pairs)
        pairs = nxt
    return pairs


def verify_simplifying(bound: int, jobs: int = 1) -> SearchReport:
    """b^2 * d > a^2 whenever a^2+a+1 = b*c*d with b >= c (all <= bound)."""
    if bound < 10:
        raise InvalidInput("bound must be at least 10")
    t0 = time.perf_counter()
    idx = get_index(bound, jobs)
    examined = 0
    cex: list[tuple] = []
    wits: list[tuple] = []
    for a in range(1, bound + 1):
        n = sigma2(a)
        for b, c in _divisor_triples(idx.facs[a]):
            d = n // (b * c)
            if b < c or b > bound or c > bound or d > bound:
                continue
            examined += 1
            tup = (a, b, c, d)
            (wits if _simplifying_conclusion(*tup) else cex).append(tup)
    return _finish("SimplifyingLemma", bound, examined, cex, wits, t0)


def verify_only_one_3(bound: int) -> SearchReport:
    """Primes p = 1 (mod 3) have 3 dividing p^2+p+1 exactly once."""
    if bound < 10:
        raise InvalidInput("bound must be at least 10")
    t0 = time.perf_counter()
    examined = 0
    cex: list[tuple] = []
    wits: list[tuple] = []
    for p in primes_below(bound + 1):
        if p % 3 != 1:
            continue
        n = sigma2(p)
        v = 0
        while n % 3 == 0:
            v += 1
            n //= 3
        examined += 1
        (wits if v == 1 else cex).append((p, v))
    return _finish("OnlyOne3", bound, examined, cex, wits, t0)


try:
    from gmpy2 import gcd as _gcd, mpz as _mpz
    from gmpy2 import powmod as _powmod
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    import math

    _mpz = int
    _gcd = math.gcd
    _powmod = pow

_CYC_BUDGET = 10**8


def _power_rho(n: int, e: int, budget: list) -> int:
    """A nontrivial factor of composite n via Brent's cycle finding on the
    map x -> x**e + a.  When every prime factor of n is 1 (mod e) the cycle
    appears about sqrt(e) times sooner than with the quadratic map, which is
    what makes exhaustive cyclotomic sweeps affordable."""
    if n % 2 == 0:
        return 2
    n = _mpz(n)
    for a in range(1, 64):
        a = _mpz(a)
        y, chunk = _mpz(2), 256
        g = r = q = _mpz(1)
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (_powmod(y, e, n) + a) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(chunk, r - k)):
                    y = (_powmod(y, e, n) + a) % n
                    q = q * abs(x - y) % n
                budget[0] -= min(chunk, r - k)
                if budget[0] < 0:
                    raise BudgetExceeded("cyclotomic factoring budget exhausted")
                g = _gcd(q, n)
                k += chunk
            r <<= 1
        if g == n:
            g = _mpz(1)
            while g == 1:
                ys = (_powmod(ys, e, n) + a) % n
                budget[0] -= 1
                if budget[0] < 0:
                    raise BudgetExceeded("cyclotomic factoring budget exhausted")
                g = _gcd(abs(x - ys), n)
        if g != n:
            return int(g)
    raise BudgetExceeded(f"power rho failed to split {n}")


def _cyclotomic_prime_factors(b: int, c: int) -> list[int]:
    """Distinct prime factors of sigma(b**(c-1)) = Phi_c(b) for prime b, c.

    Every prime factor other than c itself is 1 (mod 2c), so trial division
    only needs that residue class and the rho stage can use the power map.
    """
    n = sigma_pe(b, c - 1)
    out = set()
    if n % c == 0:
        out.add(c)
        while n % c == 0:
            n //= c
    for q in primes_below(2048):
        if q % (2 * c) == 1 and n % q == 0:
            out.add(q)
            while n % q == 0:
                n //= q
    budget = [_CYC_BUDGET]
    stack = [n] if n > 1 else []
    while stack:
        x = stack.pop()
        if x in out:
            continue
        if is_prime(x):
            out.add(x)
            continue
        d = _power_rho(x, 2 * c, budget)
        while x % d == 0:
            x //= d
        stack.append(d)
        if x > 1:
            stack.append(x)
    return sorted(out)


def _modularity_range(primes: list[int], cs: tuple[int, ...]):
    examined = 0
    cex = []
    wits = []
    for b in primes:
        for c in cs:
            examined += 1
            bad = [a for a in _cyclotomic_prime_factors(b, c) if a != c and a % c != 1]
            if bad:
                cex.append((b, c, bad[0]))
            else:
                wits.append((b, c))
    return examined, cex, wits


def verify_modularity(bound: int, cs: tuple[int, ...] = (3, 5, 7), jobs: int = 1) -> SearchReport:
    """Every prime divisor of sigma(b^(c-1)) is c or 1 (mod c), for prime b
    up to the bound and prime exponents c."""
    if bound < 10:
        raise InvalidInput("bound must be at least 10")
    t0 = time.perf_counter()
    primes = primes_below(bound + 1)
    chunks = [
        (primes[lo:hi], cs) for lo, hi in _chunk_ranges(0, len(primes), jobs * 4)
    ]
    examined = 0
    cex: list[tuple] = []
    wits: list[tuple] = []
    for part_examined, part_cex, part_wits in _pool_starmap(
        _modularity_range, chunks, jobs
    ):
        examined += part_examined
        cex.extend(part_cex)
        wits.extend(part_wits)
    return _finish("ModularityOfSigma", bound, examined, cex, wits, t0)


def reconstruct_from_d(d: int) -> tuple[int, int, int] | None:
    """Recover the unique (a, b, c) determined by the smaller shared prime d
    in the exceptional linking configuration, or None when none exists."""
    if d <= 3 or d % 2 == 0 or not is_prime(d):
        raise InvalidInput("d must be an odd prime greater than 3")
    disc = 12 * d - 3
    from .arith import isqrt

    r, exact = isqrt(disc)
    if not exact:
        return None
    b = (5 + r) // 2
    if not is_prime(b):
        return None
    nb = sigma2(b)
    if nb % 3 != 0:
        return None
    c = nb // 3
    if not is_prime(c) or c <= d:
        return None
    a = _prime_root(c * d)
    if a is None:
        return None
    return (a, b, c)


# ---------------------------------------------------------------------------
# Linking census and collision search.


LINKABLE = ("S1", "S21", "S22", "S31")


def _indexed_profile(idx: SigmaIndex, p: int):
    """Contribution profile of a squared prime, reusing the shared index so
    census-scale sweeps only factor each sigma value once."""
    from .arith import FactoredInteger
    from .contribution import ContributionProfile, _class_tag

    fac = idx.facs[p]
    n = sigma2(p)
    m = sum(e for _, e in fac)
    j = p % 3
    return ContributionProfile(
        p=p,
        e=2,
        sigma=n,
        contributed=FactoredInteger(n, fac),
        m=m,
        j=j,
        class_tag=_class_tag(m, j),
    )


def linking_census(bound: int, jobs: int = 1) -> list[FiberReport]:
    """Fibers of the linking map over all linkable primes up to the bound,
    with the injectivity checks recorded as violations per fiber."""
    if bound < 100:
        raise InvalidInput("bound must be at least 100")
    idx = get_index(bound, jobs)
    entries: list[tuple] = []
    for p in primes_below(bound + 1):
        if p in (2, 3):
            continue
        prof = _indexed_profile(idx, p)
        if prof.class_tag in LINKABLE:
            ell, exceptional = linked_prime_of(prof)
            entries.append((ell, p, prof.class_tag, exceptional))
    entries.sort()
    fibers: dict[int, list[tuple[int, str, bool]]] = {}
    for ell, p, tag, exceptional in entries:
        fibers.setdefault(ell, []).append((p, tag, exceptional))
    reports = []
    for q in sorted(fibers):
        members = fibers[q]
        violations = []
        injective_part = [m for m in members if m[1] in ("S1", "S21")]
        if len(injective_part) > 1:
            violations.append("more than one member from S1 or S21")
        if len(members) > 2:
            violations.append("fiber larger than 2")
        if len(members) == 2:
            tags = sorted(m[1] for m in members)
            if tags not in (["S31", "S31"], ["S22", "S31"]):
                violations.append(f"size-2 fiber with classes {tags}")
        reports.append(FiberReport(q=q, members=members, violations=violations))
    return reports


def find_shared_largest(
    class_tag: str, min_share: int, bound: int, jobs: int = 1
) -> list[FiberReport]:
    """Groups of same-class primes sharing their largest contributed prime;
    only fibers of at least min_share members are returned."""
    if bound < 10**3:
        raise InvalidInput("bound must be at least 1000")
    if class_tag != "S32":
        raise InvalidInput("collision search is defined for class S32")
    idx = get_index(bound, jobs)
    entries: list[tuple] = []
    for p in primes_below(bound + 1):
        if p in (2, 3):
            continue
        prof = _indexed_profile(idx, p)
        if prof.class_tag == class_tag:
            entries.append((prof.contributed.primes[-1], p))
    entries.sort()
    fibers: dict[int, list[tuple[int, str, bool]]] = {}
    for q, p in entries:
        fibers.setdefault(q, []).append((p, class_tag, False))
    return [
        FiberReport(q=q, members=members)
        for q, members in sorted(fibers.items())
        if len(members) >= min_share
    ]


# ---------------------------------------------------------------------------
# CLI-facing registry.


def run_verifier(lemma: str, bound: int, jobs: int = 1) -> SearchReport:
    """Dispatch by the CLI lemma identifier."""
    if lemma == "only-one-3":
        return verify_only_one_3(bound)
    if lemma == "modularity":
        return verify_modularity(bound, jobs=jobs)
    if lemma == "simplifying":
        return verify_simplifying(bound, jobs=jobs)
    if lemma in ("factorization1", "factorization2", "factorization3"):
        return verify_factorization_identity("F" + lemma[-1], bound, jobs=jobs)
    if lemma == "zelproof1":
        return verify_zelproof1(bound, jobs=jobs)
    aliases = {
        "zelproof2": "ZP2",
        "unique-s1-s2": "U_S1S2",
        "semi-s31": "SEMI_S31",
        "semi-s22-s31": "SEMI_S22S31",
        "unique-s1-s31": "U_S1S31",
        "unique-s21-s31": "U_S21S31",
        "small-factor": "SMALL",
    }
    if lemma in aliases:
        return verify_nonexistence(aliases[lemma], bound, jobs=jobs)
    raise InvalidInput(f"unknown lemma {lemma!r}")


VERIFIER_IDS = (
    "only-one-3",
    "modularity",
    "simplifying",
    "factorization1",
    "factorization2",
    "factorization3",
    "zelproof1",
    "zelproof2",
    "unique-s1-s2",
    "semi-s31",
    "semi-s22-s31",
    "unique-s1-s31",
    "unique-s21-s31",
    "small-factor",
    "census",
)
