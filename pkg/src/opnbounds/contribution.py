"""Contributed-prime profiles: sigma of prime powers, class tags by
(count, residue mod 3), linked primes, and role-dependent refinements."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .arith import FactoredInteger, factor, is_prime, quadratic_integer_roots
from .errors import InvalidInput

# Classes of squared primes, keyed by (contributed count m, residue j).
# m >= 4 collapses to the S4plus bucket for its residue.
CLASS_TAGS = ("S1", "S21", "S22", "S31", "S32", "S4plus_1", "S4plus_2")

ROLE_S = "S"
ROLE_T = "T"
ROLE_SPECIAL = "special"
ROLES = (ROLE_S, ROLE_T, ROLE_SPECIAL)

REFINEMENT_TAGS = (
    "S1_S",
    "S1_T",
    "S1_p0",
    "S31_SS",
    "S31_TT",
    "S31_ST",
    "S31_SnF_T",
    "S31_S_TnF",
    "S32_SnF",
    "S32_TnF",
)


def sigma_pe(p: int, e: int) -> int:
    """sum of divisors of p**e, i.e. 1 + p + ... + p**e."""
    if e < 1:
        raise InvalidInput("sigma_pe expects e >= 1")
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    return (p ** (e + 1) - 1) // (p - 1)


def contributed_primes(p: int, e: int = 2, **factor_opts) -> FactoredInteger:
    """Complete factorization of sigma(p**e); the multiset of primes the
    prime p contributes when p**e exactly divides the ambient number."""
    if p == 2:
        raise InvalidInput("p must be an odd prime")
    return factor(sigma_pe(p, e), **factor_opts)


def _class_tag(m: int, j: int) -> str:
    if m == 1:
        return "S1"
    if m == 2:
        return "S21" if j == 1 else "S22"
    if m == 3:
        return "S31" if j == 1 else "S32"
    return "S4plus_1" if j == 1 else "S4plus_2"


@dataclass(frozen=True)
class ContributionProfile:
    p: int
    e: int
    sigma: int
    contributed: FactoredInteger
    m: int
    j: int
    class_tag: str | None

    def to_json(self) -> dict:
        out = {
            "p": str(self.p),
            "e": self.e,
            "sigma": str(self.sigma),
            "factors": [[str(q), k] for q, k in self.contributed.factors],
            "m": self.m,
            "j": self.j,
        }
        if self.class_tag is not None:
            out["class"] = self.class_tag
        return out


def profile(p: int, e: int = 2, **factor_opts) -> ContributionProfile:
    """Profile of p**e; class tags apply only to e == 2 (squared primes)."""
    contributed = contributed_primes(p, e, **factor_opts)
    m = contributed.big_omega
    j = p % 3
    tag = _class_tag(m, j) if e == 2 and j != 0 else None
    return ContributionProfile(
        p=p,
        e=e,
        sigma=contributed.value,
        contributed=contributed,
        m=m,
        j=j,
        class_tag=tag,
    )


def classify(p: int, **factor_opts) -> ContributionProfile:
    """Profile of a squared non-special prime.  3 is excluded by definition."""
    if p == 3 or not is_prime(p) or p == 2:
        raise InvalidInput(f"classify expects an odd prime other than 3, got {p}")
    return profile(p, 2, **factor_opts)


def exceptional_partner(c: int) -> int | None:
    """The prime b with b**2 + b + 1 == 3*c, if one exists (it is unique)."""
    for b in quadratic_integer_roots(1, 1, 1 - 3 * c):
        if is_prime(b):
            return b
    return None


def linked_prime_of(prof: ContributionProfile) -> tuple[int, bool]:
    """Linked prime for an already-computed profile; see linked_prime."""
    if prof.class_tag not in ("S1", "S21", "S22", "S31"):
        raise InvalidInput(f"linking map is not defined on class {prof.class_tag}")
    largest = prof.contributed.primes[-1]
    if prof.class_tag == "S22" and exceptional_partner(largest) is not None:
        # The larger prime is also reachable from a squared prime that is
        # 1 mod 3; link to the smaller prime instead.
        return prof.contributed.primes[0], True
    return largest, False


def linked_prime(p: int, **factor_opts) -> tuple[int, bool]:
    """(linked prime of p, whether the exceptional smaller-prime rule fired).

    Defined for classes S1, S21, S22 and S31 only.
    """
    return linked_prime_of(classify(p, **factor_opts))


@dataclass(frozen=True)
class RoleContext:
    """Assignment of population primes to roles, with the derived set of
    primes contributed by role-S primes of class S1."""

    roles: Mapping[int, str]
    f_s1: frozenset[int] = field(default_factory=frozenset)

    @staticmethod
    def build(roles: Mapping[int, str], **factor_opts) -> "RoleContext":
        specials = [p for p, r in roles.items() if r == ROLE_SPECIAL]
        if len(specials) > 1:
            raise InvalidInput("at most one special prime")
        for p, r in roles.items():
            if r not in ROLES:
                raise InvalidInput(f"unknown role {r!r} for {p}")
        f_s1 = set()
        for p, r in roles.items():
            if r == ROLE_S and p != 3:
                prof = classify(p, **factor_opts)
                if prof.class_tag == "S1":
                    f_s1.add(prof.contributed.primes[0])
        return RoleContext(roles=dict(roles), f_s1=frozenset(f_s1))


def refine(prof: ContributionProfile, ctx: RoleContext) -> set[str]:
    """Superscript tags that apply to the profile under the role context.

    The contributed prime 3 (present exactly once when j == 1) carries no
    role and is skipped; all other contributed primes must have roles.
    """
    qs = []
    for q in prof.contributed.with_multiplicity():
        if q == 3 and prof.j == 1:
            continue
        role = ctx.roles.get(q)
        if role is None:
            raise InvalidInput(f"contributed prime {q} has no role assigned")
        qs.append((q, role))
    tags: set[str] = set()
    in_s = [(q, r) for q, r in qs if r == ROLE_S]
    in_tp = [(q, r) for q, r in qs if r in (ROLE_T, ROLE_SPECIAL)]

    if prof.class_tag == "S1":
        q, role = qs[0]
        if role == ROLE_S:
            tags.add("S1_S")
        elif role == ROLE_T:
            tags.add("S1_T")
        else:
            tags.add("S1_p0")
    elif prof.class_tag == "S31":
        # Two non-3 contributed primes.
        if len(in_s) == 2:
            tags.add("S31_SS")
        elif len(in_tp) == 2:
            tags.add("S31_TT")
        elif len(in_s) == 1 and len(in_tp) == 1:
            tags.add("S31_ST")
        if any(q not in ctx.f_s1 for q, _ in in_s) and in_tp:
            tags.add("S31_SnF_T")
        if in_s and any(q not in ctx.f_s1 for q, _ in in_tp):
            tags.add("S31_S_TnF")
    elif prof.class_tag == "S32":
        if any(q not in ctx.f_s1 for q, _ in in_s):
            tags.add("S32_SnF")
        if any(q not in ctx.f_s1 for q, _ in in_tp):
            tags.add("S32_TnF")
    return tags
