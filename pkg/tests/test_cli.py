import json

import pytest

from kronpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_coeff(capsys):
    assert run_json(capsys, "coeff", "--p", "2,2", "--p", "2,2", "--p", "2,2") == {"g": "1"}
    assert run_json(capsys, "coeff", "--p", "2^2", "--p", "2^2", "--p", "2^2", "--p", "2^2") == {"g": "3"}
    assert run_json(capsys, "coeff", "--p", "2,1", "--p", "3") == {"g": "0"}


def test_size_mismatch_is_a_usage_error(capsys):
    code, out, err = run(capsys, "coeff", "--p", "2,1", "--p", "2")
    assert code == 2
    assert out == ""
    assert "error" in json.loads(err)


@pytest.mark.parametrize("argv", [
    ["coeff"],
    ["nonsense"],
    ["coeff", "--p", "2,x"],
    ["coeff", "--p", "1,2"],
    ["additive", "--tableau", "1,2;2,4"],
    ["series", "--diagram", "A2", "--n-max", "3"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["error"]


def test_size_limit_exit_code(capsys):
    code, _, err = run(capsys, "--max-n", "8", "coeff", "--p", "3,3,3", "--p", "3,3,3", "--p", "3,3,3")
    assert code == 3
    assert "error" in json.loads(err)


def test_flags_after_subcommand(capsys, tmp_path):
    out_file = tmp_path / "g.json"
    code, out, _ = run(capsys, "coeff", "--p", "2,2", "--p", "2,2", "--p", "2,2", "--out", str(out_file))
    assert code == 0 and out == ""
    assert json.loads(out_file.read_text()) == {"g": "1"}


def test_output_is_deterministic(capsys):
    first = run(capsys, "scan", "--a", "3", "--b", "3", "--c", "3", "--n-max", "4")
    second = run(capsys, "scan", "--a", "3", "--b", "3", "--c", "3", "--n-max", "4")
    assert first == second


def test_scan_integers_are_strings(capsys):
    data = run_json(capsys, "scan", "--a", "3", "--b", "3", "--c", "3", "--n-max", "2")
    assert len(data) == 5
    assert all(isinstance(t["g"], str) for t in data)


def test_syt_and_additive(capsys):
    data = run_json(capsys, "syt", "--a", "3", "--b", "3")
    assert data["count"] == "42" and len(data["tableaux"]) == 42
    cert = run_json(capsys, "additive", "--tableau", "1,2;3,4")
    assert cert["additive"] is True
    assert run_json(capsys, "additive", "--tableau", "1,2,6;3,4,7;5,8,9") == {"additive": False}


def test_stable_triple_and_weights(capsys):
    data = run_json(capsys, "stable-triple", "--tableau", "1,2;3,4", "--lambda", "4,3,2,1")
    assert (data["a"], data["b"]) == ("7,3", "6,4")
    weights = run_json(capsys, "weights", "--tableau", "1,2;3,4")
    assert sum(int(w["mult"]) for w in weights) == 4


def test_relaxations_and_compatible(capsys):
    rels = run_json(capsys, "relaxations", "--tableau", "1,2;3,4")
    assert [r["levels"] for r in rels] == ["0,0;1,1", "0,1;1,2"]
    tabs = run_json(capsys, "compatible", "--levels", "0,1,2;1,2,3;3,4,5")
    assert len(tabs) == 8


def test_facets_round_trip_through_verify(capsys, tmp_path):
    facets = tmp_path / "facets.json"
    scan = tmp_path / "scan.json"
    assert main(["facets", "--a", "2", "--b", "2", "--c", "4", "--out", str(facets)]) == 0
    assert main(["scan", "--a", "4", "--b", "2", "--c", "2", "--n-max", "8", "--out", str(scan)]) == 0
    capsys.readouterr()
    report = run_json(capsys, "verify-facets", "--facets", str(facets), "--scan", str(scan))
    assert int(report["checked"]) > 0
    assert report["violations"] == []


def test_verify_facets_bad_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "verify-facets", "--facets", str(bad), "--scan", str(bad))
    assert code == 2
    code, _, err = run(capsys, "verify-facets", "--facets", str(tmp_path / "missing.json"),
                       "--scan", str(bad))
    assert code == 2 and "cannot read" in err
    bad.write_text('[{"x": [0]}]')
    code, _, _ = run(capsys, "verify-facets", "--facets", str(bad), "--scan", str(bad))
    assert code == 2


def test_reduced_both_methods(capsys):
    common = ["--tableau", "1,2;3,4", "--lambda", "4,3,2,1", "--alpha", "3,2,1",
              "--beta", "4,2", "--gamma", "3,3"]
    poly = run_json(capsys, "reduced", *common)
    stab = run_json(capsys, "reduced", *common, "--method", "stabilize")
    assert poly["value"] == stab["value"] == "3"
    assert stab["k_plateau"] == "1"
    code, _, _ = run(capsys, "reduced", "--tableau", "1,2;3,4", "--lambda", "4,3,2,1",
                     "--alpha", "2,2", "--beta", "2,2", "--gamma", "2,2")
    assert code == 2


def test_series(capsys):
    rows = run_json(capsys, "series", "--diagram", "E7", "--n-max", "6", "--check", "both")
    assert [r["series"] for r in rows] == ["1", "0", "1", "1", "1", "1", "2"]
    assert all(r["match"] for r in rows)
    rows = run_json(capsys, "series", "--diagram", "E8", "--n-max", "3", "--check", "quasipoly")
    assert all("quasipoly" not in r for r in rows)


def test_pretty_output(capsys):
    code, out, _ = run(capsys, "--pretty", "coeff", "--p", "1", "--p", "1")
    assert code == 0 and out.startswith("{\n")


def test_cache_commands(capsys, tmp_path):
    info = run_json(capsys, "--cache-dir", str(tmp_path), "cache", "info")
    assert info["files"] == []
    warm = run_json(capsys, "--cache-dir", str(tmp_path), "cache", "warm", "--n-max", "5")
    assert warm["warm"] == ["1", "2", "3", "4", "5"]
    info = run_json(capsys, "--cache-dir", str(tmp_path), "cache", "info")
    assert len(info["files"]) == 5
    cleared = run_json(capsys, "--cache-dir", str(tmp_path), "cache", "clear")
    assert cleared["removed"] == "5"


def test_verify_single_criterion(capsys):
    code, out, err = run(capsys, "verify", "--criterion", "1")
    assert code == 0
    assert "[PASS] criterion 1" in err
    assert json.loads(out)["passed"] is True
