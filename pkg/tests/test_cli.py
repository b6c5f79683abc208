import json

import pytest

from opnbounds import cli, lemmas


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def last_json(out):
    return json.loads(out.strip().splitlines()[-1])


def test_lp_solve_standard(capsys):
    code, out = run_cli(capsys, "lp", "solve", "--variant", "standard")
    assert code == 0
    data = last_json(out)
    assert data["bound"]["a"] == "99/37"
    assert data["bound"]["b"] == "-187/37"
    assert data["certificate"]["multipliers"]["5.1"] == "1"
    assert data["rendered"] == "99/37·ω - 187/37 ≤ Ω"


def test_lp_solve_no3(capsys):
    code, out = run_cli(capsys, "lp", "solve", "--variant", "no3")
    assert code == 0
    data = last_json(out)
    assert data["bound"]["a"] == "51/19"
    assert data["bound"]["b"] == "-46/19"


def test_lp_solve_check_roundtrip(tmp_path, capsys):
    cert_file = tmp_path / "cert.json"
    code, _ = run_cli(capsys, "lp", "solve", "--out", str(cert_file))
    assert code == 0
    code, out = run_cli(capsys, "lp", "check", str(cert_file))
    assert code == 0
    data = last_json(out)
    assert data["valid"] is True
    assert data["bound"]["a"] == "99/37"


def test_lp_check_rejects_tampered(tmp_path, capsys):
    cert_file = tmp_path / "cert.json"
    run_cli(capsys, "lp", "solve", "--out", str(cert_file))
    data = json.loads(cert_file.read_text())
    data["multipliers"]["5.3"] = "-1"
    cert_file.write_text(json.dumps(data))
    code, out = run_cli(capsys, "lp", "check", str(cert_file))
    assert code == 1
    result = last_json(out)
    assert result["valid"] is False
    assert "5.3" in result["reason"]


def test_lp_check_missing_file(capsys):
    code, _ = run_cli(capsys, "lp", "check", "/nonexistent/cert.json")
    assert code == 2


def test_verify_pass(capsys):
    code, out = run_cli(capsys, "verify", "--lemma", "only-one-3", "--bound", "2000")
    assert code == 0
    data = last_json(out)
    assert data["passed"] is True
    assert data["counterexamples"] == []


def test_verify_census(capsys):
    code, out = run_cli(capsys, "verify", "--lemma", "census", "--bound", "2000")
    assert code == 0
    data = last_json(out)
    assert data["passed"] is True and data["fibers"] > 0


def test_verify_counterexample_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(lemmas, "_f1_conclusion", lambda *t: False)
    code, out = run_cli(
        capsys, "verify", "--lemma", "factorization1", "--bound", "500"
    )
    assert code == 1
    assert last_json(out)["passed"] is False


def test_verify_rejects_unknown_lemma(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--lemma", "nonsense"])
    assert exc.value.code == 2


def test_verify_bad_bound(capsys):
    code, _ = run_cli(capsys, "verify", "--lemma", "only-one-3", "--bound", "3")
    assert code == 2


def test_classify(capsys):
    code, out = run_cli(capsys, "classify", "107")
    assert code == 0
    data = last_json(out)
    assert data["class"] == "S32"
    assert data["factors"] == [["7", 1], ["13", 1], ["127", 1]]


def test_classify_invalid(capsys):
    code, _ = run_cli(capsys, "classify", "4")
    assert code == 2


def test_link(capsys):
    code, out = run_cli(capsys, "link", "11")
    assert code == 0
    data = last_json(out)
    assert data == {"p": "11", "class": "S22", "linked": "7", "smaller_rule": True}


def test_collide(capsys):
    code, out = run_cli(
        capsys, "collide", "--bound", "20000", "--min-share", "2"
    )
    assert code == 0
    data = last_json(out)
    assert data["class"] == "S32"
    for fiber in data["fibers"]:
        assert len(fiber["members"]) >= 2


def test_cyclo(capsys):
    code, out = run_cli(capsys, "cyclo", "--t", "3", "--r", "5")
    assert code == 0
    assert last_json(out) == {"t": 3, "r": 5, "congruent": True, "divides": True}


def test_cyclo_budget_exit_code(capsys):
    code, _ = run_cli(capsys, "cyclo", "--t", "211", "--r", "211")
    assert code == 3


def test_reconstruct(capsys):
    code, out = run_cli(capsys, "reconstruct", "--d", "7")
    assert code == 0
    assert last_json(out) == {
        "d": "7",
        "found": True,
        "a": "11",
        "b": "7",
        "c": "19",
    }
    code, out = run_cli(capsys, "reconstruct", "--d", "31")
    assert code == 0
    assert last_json(out)["found"] is False


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["lp", "solve", "--variant", "bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


def test_render_report_format():
    report = lemmas.verify_only_one_3(1000)
    line = cli.render_report(report)
    assert line.startswith("PASS OnlyOne3 bound=1000")
