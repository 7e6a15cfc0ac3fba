"""The command-line front end: dispatch, documents, determinism, exit codes."""

import json
import subprocess
import sys

from newtonzeta.cli import main


def run_cli(capsys, argv, stdin_data=None, monkeypatch=None):
    if stdin_data is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", _StringIO(stdin_data))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


from io import StringIO as _StringIO


def write_job(tmp_path, data, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


PAPER_JOB = {
    "n": 2,
    "variables": ["z1", "z2"],
    "constraints": ["z1 + z2*(1+z1^2)"],
    "options": {"assume_nondegenerate": True},
}


def test_deform_origin_headline(tmp_path, capsys):
    path = write_job(tmp_path, PAPER_JOB)
    code, out, err = run_cli(capsys, ["deform-origin", path, "--scope", "affine"])
    assert code == 0
    doc = json.loads(out)
    assert doc["factors"] == [{"m": 1, "exponent": 2}]
    assert doc["pretty"] == "(1-t)^2"
    assert doc["degree"] == 2
    assert doc["assumptions"] == ["sigma-non-degenerate"]
    assert "assumptions_unacknowledged" not in doc


def test_polyzeta_power_map(tmp_path, capsys):
    job = {"n": 1, "objective": "z1^3"}
    path = write_job(tmp_path, job)
    code, out, err = run_cli(capsys, ["polyzeta", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["factors"] == [{"m": 3, "exponent": 1}]
    assert doc["assumptions_unacknowledged"] is True


def test_euler_task(tmp_path, capsys):
    job = {"n": 2, "constraints": [{"support": [[0, 0], [1, 0], [0, 1]]}]}
    path = write_job(tmp_path, job)
    code, out, err = run_cli(capsys, ["euler", path])
    assert code == 0
    assert json.loads(out)["value"] == -1


def test_mixedvol_task(tmp_path, capsys):
    job = {"n": 2, "constraints": ["z1 + z2", "z1*z2 + 1"]}
    path = write_job(tmp_path, job)
    code, out, err = run_cli(capsys, ["mixedvol", path])
    assert code == 0
    assert json.loads(out)["value"] == 2


def test_mixedvol_arity_is_input_error(tmp_path, capsys):
    job = {"n": 2, "constraints": ["z1 + z2"]}
    path = write_job(tmp_path, job)
    code, out, err = run_cli(capsys, ["mixedvol", path])
    assert code == 2
    assert "constraints" in err


def test_info_task(tmp_path, capsys):
    job = {"n": 2, "constraints": ["z1 + z2*(1+z1^2)"], "objective": "z2"}
    path = write_job(tmp_path, job)
    code, out, err = run_cli(capsys, ["info", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["mode"] == "polynomial"
    assert doc["constraints"][0]["dim"] == 2
    assert sorted(map(tuple, doc["constraints"][0]["newton_vertices"])) == [
        (0, 1), (1, 0), (2, 1),
    ]


def test_parse_error_exit_code(tmp_path, capsys):
    path = write_job(tmp_path, {"n": 1, "constraints": ["z1 +"]})
    code, out, err = run_cli(capsys, ["deform-origin", path])
    assert code == 2
    assert "position" in err


def test_schema_error_has_field_path(tmp_path, capsys):
    path = write_job(tmp_path, {"n": 2, "constraints": [{"support": [[0]]}]})
    code, out, err = run_cli(capsys, ["deform-origin", path])
    assert code == 2
    assert "constraints[0]" in err


def test_task_conflict_is_input_error(tmp_path, capsys):
    path = write_job(tmp_path, {**PAPER_JOB, "task": "polyzeta"})
    code, out, err = run_cli(capsys, ["deform-origin", path])
    assert code == 2


def test_missing_file_is_input_error(capsys):
    code, out, err = run_cli(capsys, ["deform-origin", "/nonexistent/job.json"])
    assert code == 2


def test_objective_rejected_for_scalar_tasks(tmp_path, capsys):
    job = {"n": 2, "constraints": ["z1 + z2"], "objective": "z1"}
    path = write_job(tmp_path, job)
    for task in ("euler", "mixedvol", "deform-origin"):
        code, out, err = run_cli(capsys, [task, path])
        assert code == 2, task


def test_internal_failure_exit_code(tmp_path, capsys, monkeypatch):
    path = write_job(tmp_path, PAPER_JOB)
    import newtonzeta.cli as cli_mod

    def boom(*args, **kwargs):
        raise RuntimeError("synthetic failure")

    monkeypatch.setattr(cli_mod, "zeta_deformation", boom)
    code, out, err = run_cli(capsys, ["deform-origin", path])
    assert code == 3
    assert "internal error" in err


def test_trace_factors_multiply_to_headline(tmp_path, capsys):
    path = write_job(tmp_path, PAPER_JOB)
    code, out, err = run_cli(capsys, ["deform-origin", path, "--trace"])
    assert code == 0
    doc = json.loads(out)
    rebuilt: dict[int, int] = {}
    for t in doc["traces"]:
        rebuilt[t["m"]] = rebuilt.get(t["m"], 0) + t["exponent"]
    headline = {f["m"]: f["exponent"] for f in doc["factors"]}
    assert {m: e for m, e in rebuilt.items() if e} == headline


def test_output_is_deterministic_across_jobs(tmp_path, capsys):
    job = {
        "n": 3,
        "constraints": ["z1 + z2 + z3 + z1*z2*z3"],
        "options": {"assume_nondegenerate": True},
    }
    path = write_job(tmp_path, job)
    outputs = []
    for jobs in (None, 1, 4):
        argv = ["deform-origin", path, "--trace"]
        if jobs:
            argv += ["--jobs", str(jobs)]
        code, out, err = run_cli(capsys, argv)
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_deform_var_permutes_parameter(tmp_path, capsys):
    # deformation in z1: permute it to the last position first
    job = {
        "n": 2,
        "variables": ["s", "x"],
        "constraints": ["x + s*(1+x^2)"],
        "options": {"assume_nondegenerate": True},
    }
    path = write_job(tmp_path, job)
    code, out, err = run_cli(capsys, ["deform-origin", path, "--deform-var", "s"])
    assert code == 0
    assert json.loads(out)["factors"] == [{"m": 1, "exponent": 2}]


def test_pretty_goes_to_stderr(tmp_path, capsys):
    path = write_job(tmp_path, PAPER_JOB)
    code, out, err = run_cli(capsys, ["deform-origin", path, "--pretty"])
    assert code == 0
    assert "(1-t)^2" in err


def test_console_script_runs():
    result = subprocess.run(
        [sys.executable, "-m", "newtonzeta.cli", "deform-origin", "-"],
        input=json.dumps(PAPER_JOB),
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["pretty"] == "(1-t)^2"
