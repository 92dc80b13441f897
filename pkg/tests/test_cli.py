import io
import json

import pytest

from sleecc import cli
from sleecc.cli import ExitCodes, RunConfig, Style, main, run
from sleecc.errors import ConfigError

INCONSISTENT = "sense a\nobligation o\nrule r1: IF a THEN o.\nrule r2: IF a THEN not o.\nfact a\n"


@pytest.fixture
def curtains_path(samples_dir):
    return str(samples_dir / "curtains.sleec")


def test_check_consistent(curtains_path, capsys):
    assert main(["check", "-r", curtains_path]) == ExitCodes.SUCCESS
    assert capsys.readouterr().out.startswith("CONSISTENT")


def test_check_inconsistent(tmp_path, capsys):
    rules = tmp_path / "bad.sleec"
    rules.write_text(INCONSISTENT, encoding="utf-8")

    assert main(["check", "-r", str(rules), "--engine", "sat"]) == ExitCodes.NEGATIVE
    assert "INCONSISTENT" in capsys.readouterr().out


def test_entail(curtains_path, samples_dir, capsys):
    facts = str(samples_dir / "a_notd_noth.facts")
    assert main(["entail", "-r", curtains_path, "-f", facts, "-q", "n and s"]) == ExitCodes.SUCCESS
    assert capsys.readouterr().out.startswith("ENTAILED")


def test_not_entailed_prints_countermodel(curtains_path, tmp_path, capsys):
    facts = tmp_path / "a.facts"
    facts.write_text("a\n", encoding="utf-8")

    assert main(["entail", "-r", curtains_path, "-f", str(facts), "-q", "n"]) == ExitCodes.NEGATIVE
    out = capsys.readouterr().out
    assert out.startswith("NOT_ENTAILED")
    assert "countermodel:" in out
    assert "  a = true" in out


def test_countermodel_json_matches_human(curtains_path, samples_dir, capsys):
    args = ["entail", "-r", curtains_path, "-f", str(samples_dir / "adh.facts"), "-q", "n or s"]
    assert main(args) == ExitCodes.NEGATIVE
    assert capsys.readouterr().out.startswith("NOT_ENTAILED")

    assert main(args + ["--output", "json"]) == ExitCodes.NEGATIVE
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "NOT_ENTAILED"
    assert payload["witness"]["n"] is False
    assert payload["witness"]["s"] is False


def test_closed_world_entailment(curtains_path, tmp_path, capsys):
    facts = tmp_path / "a.facts"
    facts.write_text("a\n", encoding="utf-8")

    code = main(["entail", "-r", curtains_path, "-f", str(facts), "-q", "n", "--closed-world"])
    assert code == ExitCodes.SUCCESS


def test_obligations_json(curtains_path, samples_dir, capsys):
    facts = str(samples_dir / "a_notd_noth.facts")
    assert main(["obligations", "-r", curtains_path, "-f", facts, "--output", "json", "--stats"]) == 0

    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "CONSISTENT"
    assert payload["obligations"] == ["n", "s"]
    assert payload["statuses"] == {"o": "NOT-OBLIGED", "n": "OBLIGED", "s": "OBLIGED"}
    assert payload["engine"] == "sat"


def test_obligations_inconsistent(tmp_path, capsys):
    rules = tmp_path / "bad.sleec"
    rules.write_text(INCONSISTENT, encoding="utf-8")

    assert main(["obligations", "-r", str(rules)]) == ExitCodes.NEGATIVE
    assert "INCONSISTENT" in capsys.readouterr().out


def test_rules_from_stdin(samples_dir, monkeypatch, capsys):
    text = (samples_dir / "curtains.sleec").read_text(encoding="utf-8")
    monkeypatch.setattr("sys.stdin", io.StringIO(text))

    assert main(["obligations", "-r", "-", "-f", str(samples_dir / "adh.facts")]) == 0
    out = capsys.readouterr().out
    assert "o: OBLIGED" in out
    assert "n: NOT-OBLIGED" in out


def test_compile_writes_file(curtains_path, data_dir, tmp_path, capsys):
    target = tmp_path / "out.txt"
    assert main(["compile", "-r", curtains_path, "-w", str(target)]) == 0

    assert target.read_text(encoding="utf-8") == (data_dir / "curtains_compiled.txt").read_text(encoding="utf-8")
    assert f"written to: {target}" in capsys.readouterr().out


def test_compile_dimacs_json(curtains_path, capsys):
    assert main(["compile", "-r", curtains_path, "--emit", "dimacs", "--output", "json"]) == 0

    payload = json.loads(capsys.readouterr().out)
    assert payload["dimacs"].startswith("c a 1")
    assert payload["stats"]["rules"] == 1


def test_export_asp(samples_dir, data_dir, capsys):
    code = main([
        "export", "-r", str(samples_dir / "curtains_ground.sleec"),
        "-f", str(samples_dir / "ground_ah.facts"), "--format", "asp",
    ])
    assert code == 0
    assert capsys.readouterr().out == (data_dir / "curtains_ah.lp").read_text(encoding="utf-8")


def test_export_outside_fragment(tmp_path, capsys):
    rules = tmp_path / "or.sleec"
    rules.write_text("sense a d\nobligation o\nrule: IF a or d THEN o.\n", encoding="utf-8")

    assert main(["export", "-r", str(rules), "--format", "prolog"]) == ExitCodes.ERROR
    assert capsys.readouterr().err.startswith("error:")


def test_encode_3cnf_then_check(samples_dir, tmp_path, capsys):
    target = tmp_path / "contradictory.sleec"
    assert main(["encode-3cnf", "-i", str(samples_dir / "contradictory.cnf"), "-w", str(target)]) == 0
    assert "rule c1: IF not x1 THEN x1" in target.read_text(encoding="utf-8")

    assert main(["check", "-r", str(target)]) == ExitCodes.NEGATIVE


def test_validate(curtains_path, tmp_path, capsys):
    assert main(["validate", "-r", curtains_path]) == 0
    assert "All checks passed." in capsys.readouterr().out

    broken = tmp_path / "broken.sleec"
    broken.write_text("rule r: IF", encoding="utf-8")
    assert main(["validate", "-r", str(broken)]) == ExitCodes.NEGATIVE


def test_horn_engine_refused(curtains_path, capsys):
    assert main(["check", "-r", curtains_path, "--engine", "horn"]) == ExitCodes.ERROR
    assert "error:" in capsys.readouterr().err


def test_undeclared_query_atom(curtains_path, capsys):
    assert main(["entail", "-r", curtains_path, "-q", "zz"]) == ExitCodes.ERROR


def test_missing_rules_file(tmp_path, capsys):
    assert main(["check", "-r", str(tmp_path / "absent.sleec")]) == ExitCodes.ERROR


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check"])
    assert exc.value.code == ExitCodes.ERROR


def test_missing_config_file(curtains_path, tmp_path, capsys):
    code = main(["check", "-r", curtains_path, "--config", str(tmp_path / "none.yaml")])
    assert code == ExitCodes.ERROR


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(command="entail", rules="x.sleec")
    with pytest.raises(ConfigError):
        RunConfig(command="export", rules="x.sleec", format="xml")
    with pytest.raises(ConfigError):
        RunConfig(command="encode-3cnf")


def test_run_writes_to_given_stream(curtains_path):
    out = io.StringIO()
    assert run(RunConfig(command="check", rules=curtains_path, output="json"), out) == 0
    assert json.loads(out.getvalue())["verdict"] == "CONSISTENT"


def test_style():
    assert Style(True).verdict("OK", True) == "\033[32mOK\033[0m"
    assert Style(False).verdict("OK", False) == "OK"


def test_malformed_config_file(curtains_path, tmp_path, capsys):
    path = tmp_path / "config.yaml"
    path.write_text("just a string\n", encoding="utf-8")

    assert main(["check", "-r", curtains_path, "--config", str(path)]) == ExitCodes.ERROR
    assert "top level must be a mapping" in capsys.readouterr().err


def test_compile_thousand_rules(tmp_path, capsys):
    k = 1000
    rules = tmp_path / "wide.sleec"
    body = "".join(f"rule r{i}: IF s{i} THEN q.\n" for i in range(k))
    rules.write_text(f"sense {' '.join(f's{i}' for i in range(k))}\nobligation q\n{body}", encoding="utf-8")

    assert main(["compile", "-r", str(rules)]) == 0
    assert capsys.readouterr().out.count("-> q") == k
    assert main(["export", "-r", str(rules), "--format", "formula"]) == 0
    assert capsys.readouterr().out.count("-> q") == k


def test_deeply_parenthesised_query(curtains_path, capsys):
    query = "(" * 400 + "n" + ")" * 400
    assert main(["entail", "-r", curtains_path, "-q", query]) == ExitCodes.NEGATIVE
    assert capsys.readouterr().out.startswith("NOT_ENTAILED")


def test_recursion_limit_reported(curtains_path, monkeypatch, capsys):
    def overflow(cfg, out, style):
        raise RecursionError("maximum recursion depth exceeded")

    monkeypatch.setitem(cli._DISPATCH, "check", overflow)
    assert main(["check", "-r", curtains_path]) == ExitCodes.ERROR
    assert capsys.readouterr().err.strip() == "error: formula nesting too deep"


def test_invalid_utf8_rules(tmp_path, capsys):
    rules = tmp_path / "latin1.sleec"
    rules.write_bytes(b"sense a\xff\nobligation o\n")

    assert main(["check", "-r", str(rules)]) == ExitCodes.ERROR
    assert capsys.readouterr().err.startswith("error: 1:8: expected UTF-8 text")


def test_rules_from_binary_stdin(samples_dir, monkeypatch, capsys):
    data = (samples_dir / "curtains.sleec").read_bytes()
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(data), encoding="ascii"))

    assert main(["check", "-r", "-"]) == ExitCodes.SUCCESS
    assert capsys.readouterr().out.startswith("CONSISTENT")
