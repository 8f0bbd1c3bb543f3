import json
import subprocess
import sys

from logcap.cli import main
from tests.conftest import FIXTURES


def run_cli(args, capsys):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(capsys):
    code, out, _ = run_cli(["validate", FIXTURES / "e1.json"], capsys)
    assert code == 0
    assert "pass  H1" in out


def test_validate_math_failure_names_h1(capsys):
    code, out, _ = run_cli(["validate", FIXTURES / "h1_violating.json"], capsys)
    assert code == 2
    assert "FAIL  H1" in out


def test_validate_corrupted_names_cocycle_identity(capsys):
    code, out, _ = run_cli(["validate", FIXTURES / "corrupted_cocycle.json"], capsys)
    assert code == 2
    assert "FAIL  cocycle-identity" in out


def test_validate_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(["validate", bad], capsys)
    assert code == 1
    assert "line" in err


def test_validate_schema_violation(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"prime": 2}))
    code, _, err = run_cli(["validate", bad], capsys)
    assert code == 1
    assert "missing" in err


def test_verify_e1_json_report(capsys):
    code, out, _ = run_cli(["verify", FIXTURES / "e1.json"], capsys)
    assert code == 0
    payload = json.loads(out)
    inst = payload["instances"][0]
    assert inst["delta"] == {}
    checks = {c["check"]: c for c in inst["checks"]}
    assert all(c["status"] == "pass" for c in checks.values())
    assert checks["V6"]["witness"]["trace_image_order"] == 1
    assert payload["summary"]["fail"] == 0


def test_verify_h1_fixture_exit_code(capsys):
    code, out, _ = run_cli(["verify", FIXTURES / "h1_violating.json"], capsys)
    assert code == 2
    payload = json.loads(out)
    statuses = {c["status"] for c in payload["instances"][0]["checks"]}
    assert statuses == {"hypothesis-failed"}


def test_verify_corrupted_fixture_exit_code(capsys):
    code, _, _ = run_cli(["verify", FIXTURES / "corrupted_cocycle.json"], capsys)
    assert code == 2


def test_verify_markdown_byte_stable(tmp_path, capsys):
    outputs = []
    for k in range(3):
        out = tmp_path / f"r{k}.md"
        code, _, _ = run_cli(
            ["verify", FIXTURES / "e1.json", "--format", "markdown", "--out", out],
            capsys,
        )
        assert code == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]
    assert b"| V1 | pass |" in outputs[0]


def test_search_writes_corpus_with_e1(tmp_path, capsys):
    code, out, _ = run_cli(
        [
            "search", "--prime", "2", "--precision", "3",
            "--G", "2", "--Atilde", "2", "--out", tmp_path / "c",
        ],
        capsys,
    )
    assert code == 0
    manifest = json.loads((tmp_path / "c" / "manifest.json").read_text())
    files = [f["name"] for comp in manifest["components"] for f in comp["files"]]
    assert len(files) == 1
    data = json.loads((tmp_path / "c" / files[0]).read_text())
    assert data == json.loads((FIXTURES / "e1.json").read_text())


def test_search_trivial_torsion_single_instance(tmp_path, capsys):
    code, _, _ = run_cli(
        [
            "search", "--prime", "2", "--precision", "3",
            "--G", "2", "--Atilde", "0", "--out", tmp_path / "c",
        ],
        capsys,
    )
    assert code == 0
    manifest = json.loads((tmp_path / "c" / "manifest.json").read_text())
    assert sum(c["count"] for c in manifest["components"]) == 1


def test_search_repeat_runs_identical_manifest(tmp_path, capsys):
    args = [
        "search", "--prime", "2", "--precision", "4",
        "--G", "2", "--G", "4", "--Atilde", "0", "--Atilde", "2",
        "--seed", "7",
    ]
    code, _, _ = run_cli(args + ["--out", tmp_path / "a"], capsys)
    assert code == 0
    code, _, _ = run_cli(args + ["--out", tmp_path / "b"], capsys)
    assert code == 0
    assert (tmp_path / "a" / "manifest.json").read_bytes() == (
        tmp_path / "b" / "manifest.json"
    ).read_bytes()


def test_search_ceiling_refusal_exit_code(tmp_path, capsys):
    code, _, err = run_cli(
        [
            "search", "--prime", "3", "--precision", "3",
            "--G", "3,3", "--Atilde", "3,3", "--out", tmp_path / "c",
            "--ceiling", "100", "--mode", "exhaustive",
        ],
        capsys,
    )
    assert code == 3
    assert "refused" in err


def test_oracle_command(capsys):
    code, out, _ = run_cli(["oracle", FIXTURES / "e1.json"], capsys)
    assert code == 0
    assert "|U| = 32" in out
    assert "|U'| = 2" in out


def test_oracle_bound_refusal(capsys):
    code, _, err = run_cli(["oracle", FIXTURES / "e1.json", "--bound", "8"], capsys)
    assert code == 3
    assert "refused" in err


def test_report_rerenders_markdown(tmp_path, capsys):
    out_json = tmp_path / "report.json"
    code, _, _ = run_cli(
        ["verify", FIXTURES / "e1.json", "--out", out_json], capsys
    )
    assert code == 0
    code, out, _ = run_cli(["report", out_json], capsys)
    assert code == 0
    assert "| V1 | pass |" in out


def test_report_rejects_non_report(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("[]")
    code, _, err = run_cli(["report", p], capsys)
    assert code == 1


def test_module_entrypoint_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "logcap.cli", "validate", str(FIXTURES / "e1.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "pass  H1" in proc.stdout


def test_verify_directory_input(tmp_path, capsys):
    import shutil

    shutil.copy(FIXTURES / "e1.json", tmp_path / "e1.json")
    code, out, _ = run_cli(["verify", tmp_path], capsys)
    assert code == 0
    assert json.loads(out)["summary"]["instances"] == 1
