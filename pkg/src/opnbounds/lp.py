"""The counting-relation system, certificate expansion and validation, and
two-phase exact rational optimization of the bound a*omega + b <= Omega."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

# Registry of counting symbols.  Omega / omega are total / distinct prime
# factor counts; the rest are class cardinalities and valuation counters.
SYMBOLS = (
    "Omega",
    "omega",
    "e0",
    "f3",
    "g4",
    "S",
    "T",
    "S1",
    "S2",
    "S3",
    "S4p",
    "S21",
    "S22",
    "S31",
    "S32",
    "S41",
    "S42",
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

EQ = "EQ"
LE = "LE"

VARIANTS = ("standard", "no3")


class InvalidCertificate(Exception):
    """A certificate violated one of the validity conditions; the message
    names the first violated condition."""


class UnknownRelation(Exception):
    pass


class Unbounded(Exception):
    pass


class Infeasible(Exception):
    pass


@dataclass(frozen=True)
class LinearRelation:
    """(sum of terms + constant) KIND 0, oriented left-minus-right."""

    id: str
    kind: str
    terms: Mapping[str, Fraction]
    constant: Fraction = Fraction(0)

    def evaluate(self, point: Mapping[str, int]) -> Fraction:
        return sum(
            (c * point.get(s, 0) for s, c in self.terms.items()),
            start=Fraction(0),
        ) + self.constant

    def holds_at(self, point: Mapping[str, int]) -> bool:
        v = self.evaluate(point)
        return v == 0 if self.kind == EQ else v <= 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "terms": {s: str(c) for s, c in sorted(self.terms.items())},
            "constant": str(self.constant),
        }


@dataclass(frozen=True)
class ConstraintSystem:
    variant: str
    relations: tuple[LinearRelation, ...]

    def relation(self, rel_id: str) -> LinearRelation:
        for r in self.relations:
            if r.id == rel_id:
                return r
        raise UnknownRelation(rel_id)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(r.id for r in self.relations)

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "relations": [r.to_json() for r in self.relations],
        }


@dataclass(frozen=True)
class Certificate:
    """One multiplier per relation id; the weighted relation sum proves the
    bound when all validity conditions hold."""

    variant: str
    multipliers: Mapping[str, Fraction]

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "multipliers": {k: str(v) for k, v in sorted(self.multipliers.items())},
        }

    @staticmethod
    def from_json(data: dict) -> "Certificate":
        return Certificate(
            variant=data["variant"],
            multipliers={k: Fraction(v) for k, v in data["multipliers"].items()},
        )


@dataclass(frozen=True)
class BoundResult:
    """The certified inequality a*omega + b <= Omega with its residual."""

    a: Fraction
    b: Fraction
    residual: Mapping[str, Fraction]
    constant: Fraction

    def to_json(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "residual": {s: str(c) for s, c in sorted(self.residual.items()) if c},
        }

    def render(self) -> str:
        return f"{self.a}·ω {'-' if self.b < 0 else '+'} {abs(self.b)} ≤ Ω"


def _frac_terms(**terms: int | Fraction) -> dict[str, Fraction]:
    return {s: Fraction(c) for s, c in terms.items() if c}


def build_system(variant: str) -> ConstraintSystem:
    """The nineteen-relation counting system (twenty in the 3-free variant,
    where omega = 1 + S + T becomes an equality and f3 = 0 is appended)."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    half = Fraction(1, 2)
    rels = [
        LinearRelation("5.1", EQ, _frac_terms(e0=1, f3=1, S=2, g4=1, Omega=-1)),
        LinearRelation(
            "5.2",
            EQ if variant == "no3" else LE,
            _frac_terms(omega=1, S=-1, T=-1),
            Fraction(-1 if variant == "no3" else -2),
        ),
        LinearRelation("5.3", LE, _frac_terms(T=4, g4=-1)),
        LinearRelation("5.4", LE, _frac_terms(e0=-1), Fraction(1)),
        LinearRelation("5.5", EQ, _frac_terms(S=1, S1=-1, S2=-1, S3=-1, S4p=-1)),
        LinearRelation("5.6", EQ, _frac_terms(S2=1, S21=-1, S22=-1)),
        LinearRelation("5.7", EQ, _frac_terms(S3=1, S31=-1, S32=-1)),
        LinearRelation("5.8", EQ, _frac_terms(S4p=1, S41=-1, S42=-1)),
        LinearRelation("5.9", EQ, _frac_terms(S1=1, S1_S=-1, S1_T=-1, S1_p0=-1)),
        LinearRelation("5.10", EQ, _frac_terms(S31=1, S31_SS=-1, S31_TT=-1, S31_ST=-1)),
        LinearRelation("5.11", LE, _frac_terms(S31=1, S31_SnF_T=-1, S31_S_TnF=-1)),
        LinearRelation("5.12", LE, _frac_terms(S32=1, S32_SnF=-1, S32_TnF=-1)),
        LinearRelation("5.13", LE, _frac_terms(S1_p0=1), Fraction(-1)),
        LinearRelation("5.14", LE, _frac_terms(S21=1, S31=1, S41=1, f3=-1)),
        LinearRelation(
            "5.15",
            LE,
            _frac_terms(S1=1, S22=2, S32=3, S42=4, S41=1, g4=-1, e0=-1, S21=-1),
        ),
        LinearRelation(
            "5.16",
            LE,
            _frac_terms(S1=1, S2=1, T=-1, S21=-1, S31=-1, S41=-1),
            Fraction(-1),
        ),
        LinearRelation(
            "5.17",
            LE,
            _frac_terms(S1=1, S22=half, S31=half - 1, T=-1, S41=-1),
            Fraction(-1),
        ),
        LinearRelation(
            "5.18",
            LE,
            _frac_terms(
                S1_S=2, S31_SS=1, S31_SnF_T=1, S32_SnF=1, S21=-2, S31=-2, S41=-2
            ),
        ),
        LinearRelation(
            "5.19",
            LE,
            _frac_terms(S1_T=4, S31_TT=1, S31_S_TnF=1, S32_TnF=1, g4=-1, e0=-1),
        ),
    ]
    if variant == "no3":
        rels.append(LinearRelation("5.21", EQ, _frac_terms(f3=1)))
    return ConstraintSystem(variant, tuple(rels))


def expand(
    system: ConstraintSystem, cert: Certificate
) -> tuple[dict[str, Fraction], Fraction]:
    """Weighted sum of all relations: residual per symbol plus constant.

    Relation ids missing from the certificate count as multiplier 0; ids not
    present in the system raise UnknownRelation.
    """
    known = set(system.ids)
    for rel_id in cert.multipliers:
        if rel_id not in known:
            raise UnknownRelation(rel_id)
    residual: dict[str, Fraction] = {}
    constant = Fraction(0)
    for rel in system.relations:
        c = Fraction(cert.multipliers.get(rel.id, 0))
        if c == 0:
            continue
        constant += c * rel.constant
        for sym, coef in rel.terms.items():
            residual[sym] = residual.get(sym, Fraction(0)) + c * coef
    return {s: v for s, v in residual.items() if v}, constant


def check_certificate(system: ConstraintSystem, cert: Certificate) -> BoundResult:
    """Validate a certificate and extract the bound it proves.

    Conditions, in order: multiplier of 5.1 is 1; inequality multipliers are
    nonnegative; residual on Omega is -1; every other residual except omega
    is nonnegative.
    """
    if Fraction(cert.multipliers.get("5.1", 0)) != 1:
        raise InvalidCertificate("multiplier of 5.1 must equal 1")
    for rel in system.relations:
        if rel.kind == LE and Fraction(cert.multipliers.get(rel.id, 0)) < 0:
            raise InvalidCertificate(f"negative multiplier on inequality {rel.id}")
    residual, constant = expand(system, cert)
    if residual.get("Omega", Fraction(0)) != -1:
        raise InvalidCertificate("residual coefficient of Omega must be -1")
    for sym in SYMBOLS:
        if sym in ("Omega", "omega"):
            continue
        if residual.get(sym, Fraction(0)) < 0:
            raise InvalidCertificate(f"negative residual on {sym}")
    a = residual.get("omega", Fraction(0))
    return BoundResult(a=a, b=constant, residual=residual, constant=constant)


# ---------------------------------------------------------------------------
# Exact simplex.


def simplex_maximize(
    objective: Mapping[str, Fraction],
    constraints: list[tuple[Mapping[str, Fraction], str, Fraction]],
) -> tuple[Fraction, dict[str, Fraction]]:
    """Maximize objective over nonnegative variables subject to constraints
    (terms, kind, rhs) with kind in {"LE", "GE", "EQ"}.

    Two-phase tableau method over Fractions with Bland's anti-cycling rule.
    Raises Infeasible or Unbounded.
    """
    names = sorted(set(objective) | {v for t, _, _ in constraints for v in t})
    n = len(names)
    index = {v: i for i, v in enumerate(names)}

    rows: list[list[Fraction]] = []
    kinds: list[str] = []
    rhs: list[Fraction] = []
    for terms, kind, b in constraints:
        row = [Fraction(0)] * n
        for v, c in terms.items():
            row[index[v]] += Fraction(c)
        b = Fraction(b)
        if b < 0:
            row = [-c for c in row]
            b = -b
            kind = {"LE": "GE", "GE": "LE", "EQ": "EQ"}[kind]
        rows.append(row)
        kinds.append(kind)
        rhs.append(b)

    m = len(rows)
    # Columns: structural | slack/surplus | artificial.
    slack_of = [-1] * m
    art_of = [-1] * m
    ncols = n
    for i, kind in enumerate(kinds):
        if kind in ("LE", "GE"):
            slack_of[i] = ncols
            ncols += 1
    nslack = ncols - n
    for i, kind in enumerate(kinds):
        if kind in ("GE", "EQ"):
            art_of[i] = ncols
            ncols += 1

    tab = [row + [Fraction(0)] * (ncols - n) for row in rows]
    basis = [-1] * m
    for i, kind in enumerate(kinds):
        if kind == "LE":
            tab[i][slack_of[i]] = Fraction(1)
            basis[i] = slack_of[i]
        elif kind == "GE":
            tab[i][slack_of[i]] = Fraction(-1)
            tab[i][art_of[i]] = Fraction(1)
            basis[i] = art_of[i]
        else:
            tab[i][art_of[i]] = Fraction(1)
            basis[i] = art_of[i]

    def pivot(r: int, c: int) -> None:
        prow = tab[r]
        inv = 1 / prow[c]
        tab[r] = prow = [x * inv for x in prow]
        rhs[r] *= inv
        for i in range(m):
            if i == r:
                continue
            f = tab[i][c]
            if f:
                tab[i] = [x - f * y for x, y in zip(tab[i], prow)]
                rhs[i] -= f * rhs[r]
        basis[r] = c

    def run(cost: list[Fraction], allowed: int) -> Fraction:
        # Bland's rule: smallest-index entering column with positive reduced
        # cost, smallest-index basic leaving variable among min ratios.
        while True:
            ybar = [cost[b] for b in basis]
            entering = -1
            for j in range(allowed):
                if j in basis:
                    continue
                red = cost[j] - sum(
                    yb * tab[i][j] for i, yb in enumerate(ybar) if tab[i][j]
                )
                if red > 0:
                    entering = j
                    break
            if entering < 0:
                return sum(yb * rhs[i] for i, yb in enumerate(ybar))
            leave = -1
            best = None
            for i in range(m):
                coef = tab[i][entering]
                if coef > 0:
                    ratio = rhs[i] / coef
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                raise Unbounded("objective unbounded above")
            pivot(leave, entering)

    if any(a >= 0 for a in art_of):
        phase1 = [Fraction(0)] * ncols
        for a in art_of:
            if a >= 0:
                phase1[a] = Fraction(-1)
        # Entering columns stay restricted to structural and slack variables;
        # artificials start basic and must never re-enter once driven out.
        opt1 = run(phase1, n + nslack)
        if opt1 != 0:
            raise Infeasible("no feasible multiplier assignment")
        # Drive any degenerate artificial out of the basis, or drop its row.
        for i in range(m):
            if basis[i] >= n + nslack:
                for j in range(n + nslack):
                    if tab[i][j] != 0:
                        pivot(i, j)
                        break

    cost = [Fraction(0)] * ncols
    for v, c in objective.items():
        cost[index[v]] = Fraction(c)
    opt = run(cost, n + nslack)

    assignment = {v: Fraction(0) for v in names}
    for i, b in enumerate(basis):
        if b < n:
            assignment[names[b]] = rhs[i]
    return opt, assignment


def _lp_variables(system: ConstraintSystem):
    """LP variables for the multipliers of every relation except 5.1.

    Equality multipliers are free and therefore split into a difference of
    two nonnegative variables.
    """
    lpvars: list[tuple[str, str, int]] = []  # (lp name, relation id, sign)
    for rel in system.relations:
        if rel.id == "5.1":
            continue
        if rel.kind == LE:
            lpvars.append((f"c{rel.id}", rel.id, 1))
        else:
            lpvars.append((f"c{rel.id}+", rel.id, 1))
            lpvars.append((f"c{rel.id}-", rel.id, -1))
    return lpvars


def optimize(system: ConstraintSystem) -> tuple[Certificate, BoundResult]:
    """Maximize the omega coefficient, then the constant, of the certified
    bound; returns the optimal certificate and its validated result."""
    r51 = system.relation("5.1")
    for rel in system.relations:
        if rel.id != "5.1" and rel.terms.get("Omega"):
            raise AssertionError("Omega must appear only in 5.1")

    lpvars = _lp_variables(system)
    by_rel: dict[str, LinearRelation] = {r.id: r for r in system.relations}

    def combination(sym: str) -> dict[str, Fraction]:
        terms = {}
        for name, rel_id, sign in lpvars:
            coef = by_rel[rel_id].terms.get(sym)
            if coef:
                terms[name] = sign * coef
        return terms

    constraints: list[tuple[dict[str, Fraction], str, Fraction]] = []
    for sym in SYMBOLS:
        if sym in ("Omega", "omega"):
            continue
        terms = combination(sym)
        base = r51.terms.get(sym, Fraction(0))
        if terms:
            constraints.append((terms, "GE", -base))
        elif base < 0:
            raise Infeasible(f"residual on {sym} forced negative")

    omega_terms = combination("omega")
    a_opt, _ = simplex_maximize(omega_terms, constraints)

    const_terms: dict[str, Fraction] = {}
    for name, rel_id, sign in lpvars:
        c = by_rel[rel_id].constant
        if c:
            const_terms[name] = sign * c
    phase2 = constraints + [(omega_terms, "EQ", a_opt)]
    b_opt, assignment = simplex_maximize(const_terms, phase2)

    multipliers: dict[str, Fraction] = {"5.1": Fraction(1)}
    for rel in system.relations:
        if rel.id == "5.1":
            continue
        if rel.kind == LE:
            multipliers[rel.id] = assignment.get(f"c{rel.id}", Fraction(0))
        else:
            multipliers[rel.id] = assignment.get(
                f"c{rel.id}+", Fraction(0)
            ) - assignment.get(f"c{rel.id}-", Fraction(0))
    cert = Certificate(system.variant, multipliers)
    result = check_certificate(system, cert)
    assert result.a == a_opt + r51.terms.get("omega", Fraction(0))
    assert result.b == b_opt + r51.constant
    return cert, result
