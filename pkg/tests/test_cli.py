"""Command line interface: exit codes, JSON output, error objects."""

import json

from beicert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_family_analyze_roundtrip(capsys, tmp_path):
    path = tmp_path / "k321.json"
    code, out = run(capsys, "family", "multipartite", "3", "2", "1", "-o", str(path))
    assert code == 0 and out == ""
    code, out = run(capsys, "analyze", str(path))
    assert code == 0
    obj = json.loads(out)
    assert obj["assCount"] == 3
    assert [c["S"] for c in obj["cutSets"]] == [[], [4, 5, 6], [1, 2, 3, 6]]
    # byte-stable across runs
    code2, out2 = run(capsys, "analyze", str(path))
    assert out2 == out


def test_family_text_format(capsys):
    code, out = run(capsys, "family", "path", "3", "--format", "text")
    assert code == 0
    assert out == "3\n1 2\n2 3\n"


def test_analyze_text_format(capsys, tmp_path):
    path = tmp_path / "g.json"
    run(capsys, "family", "join-of-completes", "1", "2", "3", "-o", str(path))
    code, out = run(capsys, "analyze", str(path), "--format", "text")
    assert code == 0
    assert "assCount 2" in out and "unmixed True" in out


def test_certify_pass_and_fail_exit_codes(capsys, tmp_path):
    good = tmp_path / "good.json"
    run(capsys, "family", "multipartite", "2", "2", "-o", str(good))
    code, out = run(capsys, "certify", str(good), "--p", "2")
    assert code == 0
    assert json.loads(out)["verdict"] == "pass"

    bad = tmp_path / "bad.txt"
    bad.write_text("5\n1 2\n1 3\n1 4\n1 5\n2 4\n3 5\n")
    code, out = run(capsys, "certify", str(bad), "--p", "2")
    assert code == 2
    obj = json.loads(out)
    assert obj["verdict"] == "fail"
    assert obj["labelingUsed"] == [1, 2, 3, 4, 5]

    code, out = run(capsys, "certify", str(bad), "--p", "2", "--search-labelings")
    assert code == 0
    obj = json.loads(out)
    assert obj["verdict"] == "pass"
    assert obj["labelingUsed"] == [1, 2, 4, 3, 5]


def test_certify_strong_freg(capsys, tmp_path):
    path = tmp_path / "g.json"
    run(capsys, "family", "join-of-completes", "1", "2", "3", "-o", str(path))
    code, out = run(capsys, "certify", str(path), "--strong-freg")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "strong_f_regular"
    assert obj["cofactorIndex"] == 0
    assert len(obj["assumptions"]) == 2
    code, out = run(capsys, "certify", str(path), "--strong-freg", "--cofactor", "m(1,2)")
    assert code == 0
    assert json.loads(out)["cofactorIndex"] == 1


def test_certify_text(capsys, tmp_path):
    path = tmp_path / "p4.json"
    run(capsys, "family", "path", "4", "-o", str(path))
    code, out = run(capsys, "certify", str(path), "--format", "text")
    assert code == 0
    assert "verdict PASS" in out and "frobenius check: ok" in out


def test_oracle_order(capsys, tmp_path):
    path = tmp_path / "p3.json"
    run(capsys, "family", "path", "3", "-o", str(path))
    code, out = run(capsys, "oracle", "order", str(path), "--cut-set", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["combinatorialBound"] == 2
    assert obj["oracleOrder"] == 2
    assert obj["consistent"] is True


def test_oracle_colon_identity(capsys, tmp_path):
    path = tmp_path / "p3.json"
    run(capsys, "family", "path", "3", "-o", str(path))
    code, out = run(capsys, "oracle", "colon-identity", str(path), "--a", "1", "--b", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["match"] is True and obj["primeCount"] == 2


def test_error_object_and_exit_one(capsys, tmp_path):
    code, out = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 1
    obj = json.loads(out)
    assert obj["error"]["type"] == "InputError"
    assert "message" in obj["error"]

    path = tmp_path / "p3.json"
    run(capsys, "family", "path", "3", "-o", str(path))
    code, out = run(capsys, "oracle", "order", str(path), "--cut-set", "1")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "InputError"

    code, out = run(capsys, "certify", str(path), "--strong-freg", "--cofactor", "zz")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "InputError"

    code, out = run(capsys, "certify", str(path), "--p", "9")
    assert code == 1

    code, out = run(capsys, "family", "path", "0")
    assert code == 1

    code, out = run(capsys, "family", "half-graph", "2", "3")
    assert code == 1


def test_budget_error_surfaces(capsys, tmp_path):
    path = tmp_path / "p6.json"
    run(capsys, "family", "path", "6", "-o", str(path))
    code, out = run(capsys, "analyze", str(path), "--budget-subsets", "4")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "BudgetExceeded"
