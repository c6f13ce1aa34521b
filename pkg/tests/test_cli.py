import json
import os

from ospq.cli import main
from ospq.checks import CheckConfig, run_checks


def test_fast_group_passes(capsys):
    code = main(["ybe"])
    out = capsys.readouterr().out
    assert code == 0
    assert "ybe.braid-identity" in out
    assert "FAIL" not in out


def test_json_schema(capsys):
    code = main(["borel-ansatz", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    data = json.loads(out)
    assert isinstance(data, list) and data
    for item in data:
        assert set(item) == {"name", "status", "details", "elapsed_ms", "config"}
        assert item["status"] in ("pass", "fail", "skipped")
        assert item["config"]["truncation"] == 16


def test_reports_sorted_by_name(capsys):
    main(["borel-coproduct"])
    out = capsys.readouterr().out.splitlines()[:-1]
    names = [line.split()[0] for line in out]
    assert names == sorted(names)


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["no-such-thing"]) == 2


def test_bad_truncation_is_usage_error(capsys):
    assert main(["ybe", "--truncation", "7"]) == 2


def test_seed_does_not_change_statuses():
    first = [(r.name, r.status) for r in run_checks("borel-rll", CheckConfig(seed=7))]
    second = [(r.name, r.status) for r in run_checks("borel-rll", CheckConfig(seed=8))]
    assert first == second


def test_truncation_flag_flows_into_checks():
    reports = run_checks("borel-coproduct", CheckConfig(truncation=8))
    assert all(r.status == "pass" for r in reports)
    assert all(r.config["truncation"] == 8 for r in reports)


def test_export_writes_artifacts(tmp_path, capsys):
    target = tmp_path / "artifacts"
    code = main(["classical", "--export", str(target)])
    assert code == 0
    names = sorted(os.listdir(target))
    assert "matrix_r.txt" in names
    assert "relations_defining.txt" in names
    assert "relation_unimodularity.txt" in names
    assert "series_ansatz_particular.txt" in names
    text = (target / "matrix_r.txt").read_text()
    assert text.splitlines()[0] == "9"


def test_exit_code_contract_on_failure(monkeypatch, capsys):
    from ospq import checks as checks_mod

    def failing_check(config):
        return False, "forced failure"

    monkeypatch.setitem(checks_mod.CHECKS, "ybe", [("ybe.forced", failing_check)])
    assert main(["ybe"]) == 1


def test_every_registered_check_appears_exactly_once():
    from ospq.checks import CHECKS
    names = [name for group in CHECKS.values() for name, _ in group]
    assert len(names) == len(set(names))


def test_export_includes_classical_constants(tmp_path):
    from ospq.cli import export_artifacts
    export_artifacts(str(tmp_path / "out"))
    names = os.listdir(tmp_path / "out")
    assert "matrix_representation.txt" in names
    assert "structure_constants.txt" in names


def test_unwritable_export_is_usage_error(tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("file, not a directory")
    assert main(["ybe", "--export", str(blocker)]) == 2
