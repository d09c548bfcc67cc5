"""CLI tests: subprocess smoke for exit codes and output formats,
plus in-process checks for paths that need fixtures."""

import dataclasses
import json
import subprocess
import sys

from hankel_dual import cli, verify

CMD = [sys.executable, "-m", "hankel_dual.cli"]


def run_cli(*args, **kw):
    return subprocess.run(
        CMD + list(args), capture_output=True, text=True, timeout=300, **kw
    )


def test_help_exits_zero():
    assert run_cli("--help").returncode == 0
    assert run_cli("verify", "--help").returncode == 0


def test_version_exits_zero():
    proc = run_cli("--version")
    assert proc.returncode == 0


def test_no_subcommand_is_usage_error():
    assert run_cli().returncode == cli.EXIT_USAGE


def test_list_text():
    proc = run_cli("list")
    assert proc.returncode == 0
    assert "T01" in proc.stdout
    assert "S6512_1a" in proc.stdout


def test_list_json_schema():
    proc = run_cli("list", "--json")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert len(doc["entries"]) == 40
    assert len(doc["failures"]) == 16


def test_list_group_filter():
    proc = run_cli("list", "--group", "6")
    assert proc.returncode == 0
    assert "T28a" in proc.stdout
    assert "T01" not in proc.stdout
    assert run_cli("list", "--group", "99").returncode == cli.EXIT_USAGE


def test_verify_selected_entries_pass():
    proc = run_cli("verify", "--entry", "T03", "--entry", "T24")
    assert proc.returncode == cli.EXIT_OK, proc.stdout + proc.stderr
    assert "summary:" in proc.stdout
    assert "0 Fail" in proc.stdout


def test_verify_unknown_entry_is_usage_error():
    proc = run_cli("verify", "--entry", "T99")
    assert proc.returncode == cli.EXIT_USAGE
    assert "T99" in proc.stderr


def test_verify_bad_flag_value_is_usage_error():
    assert run_cli("verify", "--jobs", "many").returncode == cli.EXIT_USAGE


def test_verify_unachievable_tolerance_exits_inconclusive():
    proc = run_cli("verify", "--entry", "T04", "--tol", "1e-17")
    assert proc.returncode == cli.EXIT_INCONCLUSIVE


def test_verify_json_output(tmp_path):
    out = tmp_path / "report.json"
    proc = run_cli("verify", "--entry", "T02a", "--format", "json", "--out", str(out))
    assert proc.returncode == cli.EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["kind"] == "verification_report"
    assert all(r["status"] == "Pass" for r in doc["rows"])


def test_verify_csv_output():
    proc = run_cli("verify", "--entry", "T02a", "--format", "csv")
    assert proc.returncode == cli.EXIT_OK
    header = proc.stdout.splitlines()[0]
    assert header.startswith("row_kind,id,grid_index,params,status")


def test_flat_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nentry=T03,T21\nformat=csv\ntol=1e-5\n")
    proc = run_cli("verify", "--config", str(cfg))
    assert proc.returncode == cli.EXIT_OK
    body = proc.stdout.splitlines()[1:]
    assert all(line.split(",")[1] in ("T03", "T21") for line in body if line)


def test_flat_config_bad_key(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("entries=T03\n")
    proc = run_cli("verify", "--config", str(cfg))
    assert proc.returncode == cli.EXIT_USAGE
    assert "unknown config key" in proc.stderr


def test_missing_config_is_usage_error():
    assert run_cli("verify", "--config", "/no/such/file").returncode == cli.EXIT_USAGE


def test_json_config_roundtrip(tmp_path):
    listed = run_cli("list", "--json")
    doc = json.loads(listed.stdout)
    doc["entries"] = [e for e in doc["entries"] if e["id"] in ("T03", "T23")]
    doc["failures"] = [s for s in doc["failures"] if s["id"] == "S6514_1"]
    cfg = tmp_path / "sel.json"
    cfg.write_text(json.dumps(doc))
    proc = run_cli("verify", "--config", str(cfg), "--format", "json")
    assert proc.returncode == cli.EXIT_OK
    report = json.loads(proc.stdout)
    assert {r["entry_id"] for r in report["rows"]} == {"T03", "T23"}
    assert [r["seed_id"] for r in report["failure_rows"]] == ["S6514_1"]


def test_check_single_seed():
    proc = run_cli("check", "--seed", "S6512_1a")
    assert proc.returncode == cli.EXIT_OK
    assert "S6512_1a" in proc.stdout
    assert "control" in proc.stdout  # admissible control row always present


def test_check_unknown_seed():
    assert run_cli("check", "--seed", "nope").returncode == cli.EXIT_USAGE


def test_fail_exit_code_with_corrupted_fixture(monkeypatch, capsys):
    # corrupt one closed form in-process to exercise the Fail exit path
    from hankel_dual import catalog

    real = catalog.entry_by_id("T02a")
    rhs = real.rhs
    broken = dataclasses.replace(real, rhs=lambda P: 1.01 * float(rhs(P)))
    monkeypatch.setattr(cli.catalog, "entry_by_id", lambda _id: broken)
    code = cli.main(["verify", "--entry", "T02a", "--tol", "1e-3"])
    assert code == cli.EXIT_FAIL
    out = capsys.readouterr().out
    assert "Fail" in out


def test_jobs_env_default(monkeypatch):
    monkeypatch.setenv("HANKEL_DUAL_JOBS", "3")
    assert cli._default_jobs() == 3
    monkeypatch.setenv("HANKEL_DUAL_JOBS", "junk")
    assert cli._default_jobs() == 1
