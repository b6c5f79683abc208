"""Reference implementations used only by the test suite: a brute-force
vertex-enumeration LP solver and a constructive sampler of feasible integer
points of the counting-relation system."""

from fractions import Fraction
from itertools import combinations

from opnbounds import lp


def _solve_square(rows, rhs):
    """Gaussian elimination over Fractions; None when singular."""
    n = len(rows)
    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def vertex_enumeration_max(objective, constraints, nvars):
    """Exact optimum of max objective.x over x >= 0 and the constraints, by
    checking every basic solution.  Assumes the feasible set is a bounded
    nonempty polytope (the generator includes box constraints)."""
    names = sorted({v for t, _, _ in constraints for v in t} | set(objective))
    assert len(names) <= nvars
    idx = {v: i for i, v in enumerate(names)}
    n = len(names)
    # Every constraint plus the nonnegativity facets, as (row, kind, rhs).
    facets = []
    for terms, kind, rhs in constraints:
        row = [Fraction(0)] * n
        for v, c in terms.items():
            row[idx[v]] = Fraction(c)
        facets.append((row, kind, Fraction(rhs)))
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        facets.append((row, "GE", Fraction(0)))

    def feasible(x):
        for row, kind, rhs in facets:
            v = sum(c * xi for c, xi in zip(row, x))
            if kind == "LE" and v > rhs:
                return False
            if kind == "GE" and v < rhs:
                return False
            if kind == "EQ" and v != rhs:
                return False
        return True

    best = None
    eq_rows = [(r, v) for r, k, v in facets if k == "EQ"]
    others = [(r, v) for r, k, v in facets if k != "EQ"]
    need = n - len(eq_rows)
    for chosen in combinations(others, need):
        rows = [r for r, _ in eq_rows] + [r for r, _ in chosen]
        rhs = [v for _, v in eq_rows] + [v for _, v in chosen]
        x = _solve_square(rows, rhs)
        if x is None or not feasible(x):
            continue
        val = sum(Fraction(objective.get(v, 0)) * x[idx[v]] for v in names)
        if best is None or val > best:
            best = val
    return best


def random_box_lp(rng, max_vars=4):
    """A random bounded feasible LP: LE constraints with nonnegative right
    hand sides (origin feasible) plus a box on every variable."""
    n = rng.randint(2, max_vars)
    names = [f"x{i}" for i in range(n)]
    constraints = []
    for _ in range(rng.randint(1, 4)):
        terms = {v: Fraction(rng.randint(-3, 5)) for v in names if rng.random() < 0.8}
        if terms:
            constraints.append((terms, "LE", Fraction(rng.randint(0, 12))))
    for v in names:
        constraints.append(({v: Fraction(1)}, "LE", Fraction(rng.randint(1, 9))))
    objective = {v: Fraction(rng.randint(-2, 6)) for v in names}
    return objective, constraints, n


def sample_feasible_point(rng, system):
    """One random nonnegative-integer assignment satisfying every relation
    of the system, or None when the draw violates an inequality."""
    no3 = system.variant == "no3"
    point = {}
    r = lambda hi: rng.randint(0, hi)
    # Relation 5.18 caps the left side by 2*(S21 + S31 + S41), which the
    # 3-free variant forces to zero through 5.14 and 5.21.
    point["S1_S"] = 0 if no3 else r(2)
    point["S1_T"] = r(2)
    point["S1_p0"] = r(1)
    point["S1"] = point["S1_S"] + point["S1_T"] + point["S1_p0"]
    point["S21"] = 0 if no3 else r(2)
    point["S22"] = r(2)
    point["S2"] = point["S21"] + point["S22"]
    point["S31_SS"] = 0 if no3 else r(1)
    point["S31_TT"] = 0 if no3 else r(1)
    point["S31_ST"] = 0 if no3 else r(1)
    point["S31"] = point["S31_SS"] + point["S31_TT"] + point["S31_ST"]
    point["S31_SnF_T"] = 0 if no3 else point["S31"] + r(1)
    point["S31_S_TnF"] = point["S31"] if no3 else r(1)
    point["S32"] = r(2)
    point["S32_SnF"] = 0 if no3 else point["S32"]
    point["S32_TnF"] = point["S32"] + r(1) if no3 else r(2)
    point["S41"] = 0 if no3 else r(1)
    point["S42"] = r(1)
    point["S3"] = point["S31"] + point["S32"]
    point["S4p"] = point["S41"] + point["S42"]
    point["S"] = point["S1"] + point["S2"] + point["S3"] + point["S4p"]
    point["e0"] = 1 + r(2)
    point["f3"] = 0 if no3 else point["S21"] + point["S31"] + point["S41"] + r(1)
    # Floors keeping 5.16 and 5.17 satisfiable by construction.
    floor16 = point["S1"] + point["S22"] - point["S31"] - point["S41"] - 1
    floor17 = -(-(2 * point["S1"] + point["S22"] - point["S31"]) // 2) - point["S41"] - 1
    point["T"] = max(0, floor16, floor17) + r(2)
    floor15 = (
        point["S1"]
        + 2 * point["S22"]
        + 3 * point["S32"]
        + 4 * point["S42"]
        + point["S41"]
        - point["e0"]
        - point["S21"]
    )
    floor19 = (
        4 * point["S1_T"]
        + point["S31_TT"]
        + point["S31_S_TnF"]
        + point["S32_TnF"]
        - point["e0"]
    )
    point["g4"] = max(4 * point["T"], floor15, floor19, 0) + r(2)
    if no3:
        point["omega"] = 1 + point["S"] + point["T"]
    else:
        point["omega"] = max(0, 2 + point["S"] + point["T"] - r(2))
    point["Omega"] = (
        point["e0"] + point["f3"] + 2 * point["S"] + point["g4"]
    )
    for rel in system.relations:
        if not rel.holds_at(point):
            return None
    return point
