import random
from fractions import Fraction as F

import pytest

from lp_reference import random_box_lp, sample_feasible_point, vertex_enumeration_max
from opnbounds import lp

# The published multiplier table for the standard variant, with the c10
# adjustment (1/37 -> 0) that makes every residual nonnegative.
ADJUSTED_STANDARD = {
    "5.1": F(1),
    "5.2": F(99, 37),
    "5.3": F(28, 37),
    "5.4": F(28, 37),
    "5.5": F(25, 37),
    "5.6": F(20, 37),
    "5.7": F(25, 37),
    "5.8": F(25, 37),
    "5.9": F(4, 37),
    "5.10": F(0),
    "5.11": F(1, 37),
    "5.12": F(1, 37),
    "5.13": F(4, 37),
    "5.14": F(1),
    "5.15": F(8, 37),
    "5.16": F(5, 37),
    "5.17": F(8, 37),
    "5.18": F(2, 37),
    "5.19": F(1, 37),
}

# The published multiplier table for the 3-free variant (no adjustment
# needed there).
PUBLISHED_NO3 = {
    "5.1": F(1),
    "5.2": F(51, 19),
    "5.3": F(14, 19),
    "5.4": F(14, 19),
    "5.5": F(13, 19),
    "5.6": F(8, 19),
    "5.7": F(13, 19),
    "5.8": F(16, 19),
    "5.9": F(4, 19),
    "5.10": F(0),
    "5.11": F(1, 19),
    "5.12": F(1, 19),
    "5.13": F(4, 19),
    "5.14": F(21, 19),
    "5.15": F(4, 19),
    "5.16": F(5, 19),
    "5.17": F(0),
    "5.18": F(2, 19),
    "5.19": F(1, 19),
    "5.21": F(2, 19),
}


def test_build_system_shapes():
    std = lp.build_system("standard")
    assert len(std.relations) == 19
    assert sum(1 for r in std.relations if r.kind == lp.EQ) == 7
    no3 = lp.build_system("no3")
    assert len(no3.relations) == 20
    assert sum(1 for r in no3.relations if r.kind == lp.EQ) == 9
    with pytest.raises(ValueError):
        lp.build_system("other")


def test_relation_5_13():
    rel = lp.build_system("standard").relation("5.13")
    assert rel.terms == {"S1_p0": F(1)}
    assert rel.constant == F(-1)
    assert rel.kind == lp.LE


def test_relation_lookup_unknown():
    with pytest.raises(lp.UnknownRelation):
        lp.build_system("standard").relation("5.99")


def test_relation_evaluate_and_holds():
    rel = lp.build_system("standard").relation("5.3")  # 4T - g4 <= 0
    assert rel.evaluate({"T": 2, "g4": 8}) == 0
    assert rel.holds_at({"T": 2, "g4": 8})
    assert not rel.holds_at({"T": 3, "g4": 8})


def test_expand_single_relation():
    system = lp.build_system("standard")
    cert = lp.Certificate("standard", {"5.1": F(1)})
    residual, constant = lp.expand(system, cert)
    assert residual == {"Omega": F(-1), "e0": F(1), "f3": F(1), "S": F(2), "g4": F(1)}
    assert constant == 0


def test_expand_two_relations():
    system = lp.build_system("standard")
    cert = lp.Certificate("standard", {"5.1": F(1), "5.2": F(1)})
    residual, constant = lp.expand(system, cert)
    assert residual["omega"] == F(1)
    assert residual["T"] == F(-1)
    assert constant == F(-2)


def test_expand_unknown_relation():
    system = lp.build_system("standard")
    with pytest.raises(lp.UnknownRelation):
        lp.expand(system, lp.Certificate("standard", {"5.1": F(1), "9.9": F(1)}))


def test_check_certificate_trivial():
    system = lp.build_system("standard")
    result = lp.check_certificate(system, lp.Certificate("standard", {"5.1": F(1)}))
    assert (result.a, result.b) == (0, 0)


def test_check_certificate_adjusted_published_standard():
    system = lp.build_system("standard")
    result = lp.check_certificate(
        system, lp.Certificate("standard", ADJUSTED_STANDARD)
    )
    assert result.a == F(99, 37)
    assert result.b == F(-187, 37)
    # Residuals of the adjusted table, as mechanically expanded; these agree
    # with the published final expansion up to the c10 adjustment (which
    # moves 1/37 from S31_SS/S31_TT onto the expansion's missing S31_ST).
    nonzero = {s: v for s, v in result.residual.items() if v}
    assert nonzero == {
        "Omega": F(-1),
        "omega": F(99, 37),
        "S31_SS": F(2, 37),
        "S31_TT": F(1, 37),
        "S31_SnF_T": F(1, 37),
        "S32_SnF": F(1, 37),
        "S41": F(3, 37),
        "S42": F(7, 37),
    }


def test_check_certificate_rejects_unadjusted_c10():
    system = lp.build_system("standard")
    bad = dict(ADJUSTED_STANDARD)
    bad["5.10"] = F(1, 37)
    with pytest.raises(lp.InvalidCertificate, match="negative residual on S31_ST"):
        lp.check_certificate(system, lp.Certificate("standard", bad))


def test_check_certificate_published_no3():
    system = lp.build_system("no3")
    result = lp.check_certificate(system, lp.Certificate("no3", PUBLISHED_NO3))
    assert result.a == F(51, 19)
    assert result.b == F(-46, 19)


def test_check_certificate_wrong_51():
    system = lp.build_system("standard")
    with pytest.raises(lp.InvalidCertificate, match="5.1"):
        lp.check_certificate(system, lp.Certificate("standard", {"5.1": F(2)}))


def test_check_certificate_negative_le_multiplier():
    system = lp.build_system("standard")
    cert = lp.Certificate("standard", {"5.1": F(1), "5.3": F(-1)})
    with pytest.raises(lp.InvalidCertificate, match="negative multiplier"):
        lp.check_certificate(system, cert)


def test_check_certificate_negative_residual_named():
    system = lp.build_system("standard")
    cert = lp.Certificate("standard", {"5.1": F(1), "5.2": F(1)})
    with pytest.raises(lp.InvalidCertificate, match="negative residual on T"):
        lp.check_certificate(system, cert)


def test_certificate_json_roundtrip():
    cert = lp.Certificate("standard", ADJUSTED_STANDARD)
    again = lp.Certificate.from_json(cert.to_json())
    assert again.variant == cert.variant
    assert {k: F(v) for k, v in again.multipliers.items()} == ADJUSTED_STANDARD


def test_optimize_standard():
    system = lp.build_system("standard")
    cert, result = lp.optimize(system)
    assert result.a == F(99, 37)
    assert result.b == F(-187, 37)
    assert cert.multipliers["5.1"] == 1


def test_optimize_no3():
    system = lp.build_system("no3")
    cert, result = lp.optimize(system)
    assert result.a == F(51, 19)
    assert result.b == F(-46, 19)


def test_optimize_only_51():
    system = lp.ConstraintSystem(
        "standard", (lp.build_system("standard").relation("5.1"),)
    )
    _, result = lp.optimize(system)
    assert (result.a, result.b) == (0, 0)


def test_optimize_dominates_published():
    # The optimizer's phase-2 constant can be no worse than any valid
    # certificate at the same slope.
    for variant, table in (("standard", ADJUSTED_STANDARD), ("no3", PUBLISHED_NO3)):
        system = lp.build_system(variant)
        published = lp.check_certificate(system, lp.Certificate(variant, table))
        _, best = lp.optimize(system)
        assert best.a >= published.a
        assert best.b >= published.b


def test_render():
    _, result = lp.optimize(lp.build_system("standard"))
    assert result.render() == "99/37·ω - 187/37 ≤ Ω"


def test_simplex_textbook_cases():
    opt, assign = lp.simplex_maximize({"x": F(1)}, [({"x": F(1)}, "LE", F(3))])
    assert opt == 3 and assign["x"] == 3
    opt, assign = lp.simplex_maximize(
        {"x": F(1), "y": F(1)},
        [
            ({"x": F(1), "y": F(2)}, "LE", F(4)),
            ({"x": F(3), "y": F(1)}, "LE", F(6)),
        ],
    )
    assert opt == F(14, 5)
    assert (assign["x"], assign["y"]) == (F(8, 5), F(6, 5))


def test_simplex_unbounded():
    with pytest.raises(lp.Unbounded):
        lp.simplex_maximize({"x": F(1)}, [({"x": F(1)}, "GE", F(0))])


def test_simplex_infeasible():
    with pytest.raises(lp.Infeasible):
        lp.simplex_maximize(
            {"x": F(1)},
            [({"x": F(1)}, "LE", F(1)), ({"x": F(1)}, "GE", F(2))],
        )


def test_simplex_equality_handling():
    opt, assign = lp.simplex_maximize(
        {"x": F(1), "y": F(3)},
        [
            ({"x": F(1), "y": F(1)}, "EQ", F(4)),
            ({"y": F(1)}, "LE", F(3)),
        ],
    )
    assert opt == 10 and assign == {"x": F(1), "y": F(3)}


def test_simplex_matches_vertex_enumeration():
    rng = random.Random(20260823)
    for _ in range(50):
        objective, constraints, n = random_box_lp(rng)
        opt, _ = lp.simplex_maximize(objective, constraints)
        assert opt == vertex_enumeration_max(objective, constraints, n)


@pytest.mark.parametrize("variant", lp.VARIANTS)
def test_certificate_soundness_sampling(variant):
    system = lp.build_system(variant)
    cert, result = lp.optimize(system)
    rng = random.Random(7 if variant == "standard" else 11)
    accepted = 0
    for _ in range(4000):
        point = sample_feasible_point(rng, system)
        if point is None:
            continue
        accepted += 1
        assert result.a * point["omega"] + result.b <= point["Omega"]
    assert accepted >= 200
