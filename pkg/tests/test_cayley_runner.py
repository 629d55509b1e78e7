"""Tests für die Kommandozeile und den Runner."""
import json

import pytest

import cayley_runner
from cayley_runner import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, CayleyRunner, ConfigError, main


@pytest.fixture
def config_file(tmp_path, monkeypatch):
    """Konfiguration mit Logdateien im temporären Verzeichnis."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(cayley_runner.WORKERS_ENV, raising=False)
    path = tmp_path / "cayley_config.json"
    path.write_text(json.dumps({
        "log_level": "WARNING",
        "logging": {"main_log_file": str(tmp_path / "run.log"), "error_log_file": str(tmp_path / "err.log")},
        "workers": 1,
        "bounds": {"enum_n": 5, "series_n": 6},
    }), encoding="utf-8")
    return str(path)


def run(config_file, *argv):
    return main(list(argv) + ["--config", config_file])


def test_default_config_is_written(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    runner = CayleyRunner(str(tmp_path / "fresh.json"), {"workers": 1})
    saved = json.loads((tmp_path / "fresh.json").read_text(encoding="utf-8"))
    assert saved["bounds"]["enum_n"] == 8
    assert runner.config["cross_check_max_n"] == 7


def test_nested_sections_are_merged(config_file):
    runner = CayleyRunner(config_file)
    assert runner.config["bounds"]["enum_n"] == 5
    assert runner.config["bounds"]["witness_n"] == 9
    assert runner.config["logging"]["backup_count"] == 5


def test_invalid_config(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        CayleyRunner(str(broken))
    bad_bounds = tmp_path / "bad.json"
    bad_bounds.write_text(json.dumps({"bounds": {"enum_n": 0}}), encoding="utf-8")
    with pytest.raises(ConfigError):
        CayleyRunner(str(bad_bounds))
    assert main(["series", "E", "--config", str(broken)]) == EXIT_USAGE


def test_worker_precedence(config_file, monkeypatch):
    monkeypatch.setenv(cayley_runner.WORKERS_ENV, "3")
    assert CayleyRunner(config_file).workers == 3
    assert CayleyRunner(config_file, {"workers": 2}).workers == 2
    monkeypatch.delenv(cayley_runner.WORKERS_ENV)
    assert CayleyRunner(config_file).workers == 1
    monkeypatch.setenv(cayley_runner.WORKERS_ENV, "many")
    with pytest.raises(ConfigError):
        CayleyRunner(config_file)


def test_count_with_cross_check(config_file, capsys):
    assert run(config_file, "count", "--pattern", "231", "--format", "json") == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["counts"] == ["1", "1", "3", "12", "56", "284"]
    assert set(payload["backends"]) == {"formula+enumeration"}


def test_count_formats(config_file, capsys):
    assert run(config_file, "count", "--pattern", "21", "--max-n", "4", "--format", "bfile") == EXIT_OK
    assert capsys.readouterr().out == "0 1\n1 1\n2 2\n3 4\n4 8\n"
    assert run(config_file, "count", "--pattern", "1342", "--max-n", "4") == EXIT_OK
    assert capsys.readouterr().out.split() == ["1", "1", "3", "13", "74"]
    assert run(config_file, "count", "--pattern", "112", "--max-n", "3", "--max-k", "2",
               "--mode", "max", "--format", "tsv") == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n\tk\tcount"
    assert "3\t2\t5" in lines


def test_count_primitive(config_file, capsys):
    assert run(config_file, "count", "--mode", "primitive", "--max-n", "4") == EXIT_OK
    assert capsys.readouterr().out.split() == ["0", "1", "2", "8", "44"]


def test_count_writes_output_file(config_file, tmp_path):
    target = tmp_path / "out.txt"
    assert run(config_file, "count", "--pattern", "11", "--max-n", "4", "--output", str(target)) == EXIT_OK
    assert target.read_text(encoding="utf-8").split() == ["1", "1", "2", "6", "24"]


def test_cross_check_mismatch_exits_with_failure(config_file, monkeypatch):
    monkeypatch.setattr(cayley_runner.catalog, "formula_for", lambda p: (lambda n: 7, "falsch"))
    assert run(config_file, "count", "--pattern", "21", "--max-n", "2") == EXIT_FAILURE


def test_series(config_file, capsys):
    assert run(config_file, "series", "L o E+") == EXIT_OK
    assert capsys.readouterr().out.split() == ["1", "1", "3", "13", "75", "541", "4683"]
    assert run(config_file, "series", "E . E ** E") == EXIT_USAGE


def test_verify(config_file, capsys):
    assert run(config_file, "verify", "--name", "cay112_alt", "--name", "catalan", "--format", "json") == EXIT_OK
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["name"] for r in rows] == ["cay112_alt", "catalan"]
    assert all(r["verdict"] == "PASS" for r in rows)
    assert rows[0]["reference"] == "Cay(112) = Alt'"


def test_verify_table1(config_file, capsys):
    assert run(config_file, "verify", "--name", "table1", "--max-n", "5", "--format", "json") == EXIT_OK
    row = json.loads(capsys.readouterr().out)
    assert row["name"] == "table1"
    assert row["verdict"] == "PASS"
    assert row["bound"] == 5


def test_verify_expected_failure_keeps_exit_status(config_file, capsys):
    assert run(config_file, "verify", "--name", "prim_nonprimitive_112", "--max-n", "4") == EXIT_OK
    assert "EXPECTED-FAIL" in capsys.readouterr().out


def test_verify_failure_exit_code(config_file, monkeypatch):
    failing = cayley_runner.catalog.IdentityCheck("kaputt", 3, cayley_runner.catalog.FAIL, "x")
    monkeypatch.setattr(cayley_runner.catalog, "verify_identity", lambda name, N=None: failing)
    assert run(config_file, "verify", "--name", "kaputt") == EXIT_FAILURE


def test_equiv_pair_and_classification(config_file, capsys):
    assert run(config_file, "equiv", "11", "12", "--max-n", "4") == EXIT_OK
    assert "DISTINGUISHED" in capsys.readouterr().out
    assert run(config_file, "equiv", "--length", "2", "--max-n", "4", "--format", "json") == EXIT_OK
    assert json.loads(capsys.readouterr().out)["classes"] == [["11"], ["12", "21"]]


def test_bij(config_file, capsys):
    assert run(config_file, "bij", "--name", "prim_expand", "--input", "2,3,7;325154") == EXIT_OK
    assert capsys.readouterr().out.strip() == "333251154"
    assert run(config_file, "bij", "--name", "cay_bal", "--suite", "4", "--format", "json") == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["checked"] == 75 and report["round_trip_ok"]
    assert run(config_file, "bij", "--name", "simion_schmidt", "--input", "123") == EXIT_USAGE


def test_conjecture(config_file, capsys):
    assert run(config_file, "conjecture", "--which", "cm_implies_sc", "--max-len", "2",
               "--max-n", "4", "--max-k", "3", "--format", "json") == EXIT_OK
    assert json.loads(capsys.readouterr().out)["verdict"] == "NO-COUNTEREXAMPLE-FOUND"
    assert run(config_file, "conjecture", "--which", "fixpoint", "--max-n", "4") == EXIT_OK
    assert "verified up to 4" in capsys.readouterr().out


def test_table(config_file, capsys):
    assert run(config_file, "table", "--max-n", "4", "--confirm", "--format", "json") == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert [r["oeis"] for r in rows] == ["A000142", "A011782", "A080599", "A001710", "A226316"]
    assert rows[-1]["counts"] == ["1", "1", "3", "12", "56"]


@pytest.mark.parametrize("argv", [
    ["count", "--pattern", "13"],
    ["verify", "--name", "no_such_identity"],
    ["bij", "--name", "nope", "--input", "12"],
    ["frobnicate"],
    ["count", "--format", "xml"],
])
def test_usage_errors(config_file, argv):
    assert run(config_file, *argv) == EXIT_USAGE
