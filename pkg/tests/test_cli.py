import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from cli import cli
from cli.settings import env_bool, env_int, env_str, load_settings
from models import CellReport, SuiteReport
from services.verification_service import VerificationService


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.setenv("ONEDIM_LOAD_DOTENV", "0")
    for name in ("ONEDIM_CACHE_DIR", "ONEDIM_WORKERS", "ONEDIM_DEGREE_CAP", "ONEDIM_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def _invoke(*args):
    return CliRunner().invoke(cli, list(args))


# ================================================================
# Settings
# ================================================================

def test_env_helpers(monkeypatch):
    monkeypatch.setenv("ONEDIM_FLAG", "Yes")
    monkeypatch.setenv("ONEDIM_COUNT", "seven")
    monkeypatch.setenv("ONEDIM_NAME", "   ")
    assert env_bool("ONEDIM_FLAG", False) is True
    assert env_bool("ONEDIM_MISSING", True) is True
    assert env_int("ONEDIM_COUNT", 3) == 3
    assert env_str("ONEDIM_NAME", "fallback") == "fallback"


def test_load_settings_reads_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("ONEDIM_CACHE_DIR", str(tmp_path))
    monkeypatch.setenv("ONEDIM_WORKERS", "0")
    monkeypatch.setenv("ONEDIM_LOG_LEVEL", "debug")
    settings = load_settings(dotenv=False)
    assert settings.cache_dir == tmp_path
    assert settings.workers == 1
    assert settings.degree_cap == 6
    assert settings.log_level == "DEBUG"


# ================================================================
# x / kostka / kl
# ================================================================

def test_x_command_values():
    assert _invoke("x", "--kind", "11", "--mu", "1,1").output.strip() == "q^2"
    assert _invoke("x", "--kind", "empty", "--lambda", "2,1", "--mu", "1,1,1").output.strip() == "q + q^2"
    assert _invoke("x", "--kind", "11", "--lambda", "2", "--mu", "2").output.strip() == "1"


def test_x_command_formats():
    result = _invoke("x", "--mu", "1,1", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["x"] == "q^2"
    assert payload["rank"] == 3
    assert payload["kind"] == "11"
    assert _invoke("x", "--mu", "1,1", "--format", "latex").output.strip() == "q^{2}"


def test_x_command_usage_errors():
    assert _invoke("x", "--kind", "1", "--mu", "1").exit_code == 2
    assert _invoke("x", "--mu", "1,2").exit_code == 2
    assert _invoke("x", "--kind", "3").exit_code == 2
    assert _invoke("x", "--kind", "empty", "--mu", "1,1,1", "--rank", "2").exit_code == 2


def test_kostka_command():
    assert _invoke("kostka", "--lambda", "2,1", "--mu", "1,1,1").output.strip() == "q + q^2"
    assert _invoke("kostka", "--lambda", "2,1", "--mu", "1,1,1", "--route", "charge").output.strip() == "q + q^2"
    assert _invoke("kostka", "--lambda", "3", "--mu", "1,1,1", "--cocharge").output.strip() == "1"
    assert _invoke("kostka", "--lambda", "2", "--mu", "1,1", "--route", "onedim").output.strip() == "q"


def test_kl_command():
    assert _invoke("kl", "--type", "C", "--rank", "2", "--lambda", "1,1", "--mu", "0,0").output.strip() == "q^2"
    result = _invoke("kl", "--type", "A", "--rank", "2", "--lambda", "2,-2", "--mu", "0,0", "--stable")
    assert result.exit_code == 0
    assert result.output.strip() == "q^2"


def test_kl_command_usage_errors():
    assert _invoke("kl", "--type", "C", "--rank", "2", "--lambda", "0,1", "--mu", "0,0").exit_code == 2
    assert _invoke("kl", "--type", "C", "--rank", "2", "--lambda", "1,1", "--mu", "0,0",
                   "--l-short", "1").exit_code == 2
    assert _invoke("kl", "--type", "D", "--rank", "2", "--lambda", "1,1", "--mu", "0,0").exit_code == 2
    assert _invoke("kl", "--type", "C", "--rank", "2", "--lambda", "1,1,1", "--mu", "0").exit_code == 2


# ================================================================
# verify
# ================================================================

def test_verify_list():
    result = _invoke("verify", "--list")
    assert result.exit_code == 0
    assert "theorem4" in result.output
    assert "littlewood" in result.output


def test_verify_unknown_or_missing_suite():
    assert _invoke("verify", "nope").exit_code == 2
    assert _invoke("verify").exit_code == 2
    assert _invoke("verify", "stability", "--kind", "2", "--max-mu", "1").exit_code == 2


def test_verify_ny_passes():
    result = _invoke("verify", "ny", "--max-mu", "2")
    assert result.exit_code == 0
    assert result.output.strip().splitlines()[-1] == "ny: pass (4/4 cells)"


def test_verify_json_and_report_file(tmp_path):
    out = tmp_path / "reports" / "ny.json"
    result = _invoke("verify", "ny", "--max-mu", "2", "--format", "json", "--out", str(out))
    assert result.exit_code == 0
    assert json.loads(result.output)["suite"] == "ny"
    assert SuiteReport.from_json(out.read_text(encoding="utf-8")).passed


def test_verify_latex_table():
    result = _invoke("verify", "ny", "--max-mu", "2", "--format", "latex")
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == r"\begin{tabular}{llllll}"
    assert r"empty & 3 & (1,1) & (1,1) & $q$ & $q$ \\" in lines
    assert lines[-1] == "% ny: pass (4/4 cells)"


def test_verify_latex_braces_exponents(monkeypatch):
    cell = CellReport(lam=[], mu=[1, 1], kind="11", rank=3, x="q^2", k="q^2", passed=True)
    monkeypatch.setattr(VerificationService, "run", lambda self, config: SuiteReport.assemble(config.suite, [cell]))
    result = _invoke("verify", "ny", "--max-mu", "1", "--format", "latex")
    assert r"11 & 3 & $\emptyset$ & (1,1) & $q^{2}$ & $q^{2}$ \\" in result.output


def test_verify_uses_the_cache_dir(tmp_path):
    _invoke("verify", "ny", "--max-mu", "1", "--cache-dir", str(tmp_path))
    assert [p.name.split("-")[0] for p in tmp_path.iterdir()] == ["ny"]


def test_verify_exits_one_on_failure(monkeypatch):
    cell = CellReport(lam=[1], mu=[1], kind="empty", rank=2, x="1", k="q", passed=False, detail="X̄=1 K̄=q")
    monkeypatch.setattr(VerificationService, "run", lambda self, config: SuiteReport.assemble(config.suite, [cell]))
    result = _invoke("verify", "ny", "--max-mu", "1")
    assert result.exit_code == 1
    assert "FAIL" in result.output


# ================================================================
# graph
# ================================================================

def test_graph_to_stdout():
    result = _invoke("graph", "--type", "C", "--rank", "2", "--mu", "1,1")
    assert result.exit_code == 0
    vertices = [l for l in result.output.splitlines() if l.strip().endswith('";') and "->" not in l]
    assert len(vertices) == 16


def test_graph_to_file(tmp_path):
    out = tmp_path / "a3.dot"
    result = _invoke("graph", "--type", "A", "--rank", "3", "--mu", "1", "--colors", "2", "--out", str(out))
    assert result.exit_code == 0
    text = Path(out).read_text(encoding="utf-8")
    assert '"2" -> "3" [label="2"];' in text
    assert 'label="1"' not in text


def test_graph_usage_errors():
    assert _invoke("graph", "--type", "C", "--rank", "2", "--mu", "").exit_code == 2
    assert _invoke("graph", "--type", "D", "--rank", "2", "--mu", "1").exit_code == 2
    assert _invoke("graph", "--type", "C", "--rank", "2", "--mu", "1", "--colors", "x").exit_code == 2
