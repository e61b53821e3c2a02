import json

import pytest

from nephroid_radii.cli import RECORD_KEYS, RunConfig, build_config, build_parser, main, read_config
from nephroid_radii.errors import ParameterError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_radius_json(capsys):
    code, out, _ = run(capsys, "radius", "starlike", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert tuple(rec) == RECORD_KEYS
    assert rec["closed_form"] == 0.25 and rec["agree"] is True
    assert rec["oracle"] == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize(
    "argv, value",
    [(["janowski", "--A", "1", "--B", "-1"], 0.25), (["bs", "--alpha", "0"], 2 / 3)],
)
def test_radius_values(capsys, argv, value):
    code, out, _ = run(capsys, "radius", *argv, "--format", "json")
    assert code == 0
    assert json.loads(out)["closed_form"] == pytest.approx(value)


def test_radius_text_has_nine_digits(capsys):
    code, out, _ = run(capsys, "radius", "rl")
    assert code == 0
    assert "0.874764306" in out


@pytest.mark.parametrize(
    "argv",
    [["radius", "convex", "--alpha", "0.2"], ["radius", "hexagon"], ["radius", "g1", "--n", "0"],
     ["bogus"], ["plot", "cardioid"], ["verify"]],
)
def test_usage_errors_exit_one(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


def test_radius_disagreement_exits_two(capsys):
    code, out, err = run(capsys, "radius", "g4", "--n", "2")
    assert code == 2
    assert "NO" in out


def test_verify_lune_passes_as_non_sharp(capsys):
    code, out, _ = run(capsys, "verify", "lune", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["mismatches"] == []
    (rec,) = data["results"]
    assert tuple(rec) == RECORD_KEYS
    assert rec["sharp"] is False and rec["clearance"] > 1e-3


def test_verify_g1_touches(capsys):
    code, out, _ = run(capsys, "verify", "g1", "--n", "3", "--format", "json")
    values = {v for v, _ in json.loads(out)["results"][0]["touch_points"]}
    assert code == 0
    assert values == {1 / 3, 5 / 3}


def test_verify_text_reports_pass(capsys):
    code, out, _ = run(capsys, "verify", "cardioid")
    assert code == 0 and "PASS" in out


def test_verify_all_and_selector_conflict(capsys):
    assert run(capsys, "verify", "lune", "--all")[0] == 1


def test_table_rows(capsys):
    code, out, err = run(capsys, "table")
    rows = {line.split()[0]: line for line in out.splitlines()}
    assert "0.874764306" in rows["rl"]
    assert "0.804737854" in rows["rational"]
    assert "0.625145117" in rows["sine"] and "not sharp" in rows["sine"]
    # the stated G4 radii disagree with the disk-bound oracle
    assert code == 2 and "g4(n=1)" in err


def test_table_json_schema(capsys):
    _, out, _ = run(capsys, "table", "--format", "json")
    records = json.loads(out)
    assert len(records) == 127
    assert all(tuple(r) == RECORD_KEYS for r in records)


def test_plot_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "plot", "cardioid", "--at-rho", "--out", str(tmp_path))
    assert code == 0
    path = tmp_path / "plots" / "cardioid" / "default_0.414213562.svg"
    assert out.strip() == str(path) and path.exists()
    code, out, _ = run(capsys, "plot", "nephroid", "--out", str(tmp_path))
    assert (tmp_path / "plots" / "nephroid" / "boundary.svg").exists()
    code, out, _ = run(capsys, "plot", "exp", "--alpha", "0", "--r", "0.3", "--out", str(tmp_path))
    assert code == 0 and (tmp_path / "plots" / "exp" / "alpha0_0.3.svg").exists()


def test_env_var_sets_output_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("NEPHROID_OUT", str(tmp_path))
    assert run(capsys, "plot", "nephroid")[0] == 0
    assert (tmp_path / "plots" / "nephroid" / "boundary.svg").exists()


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nformat = json\nboundary_samples=1024\nout=/from/config\n")
    args = build_parser().parse_args(["table", "--config", str(cfg)])
    config = build_config(args, environ={})
    assert (config.format, config.boundary_samples, config.out) == ("json", 1024, "/from/config")
    config = build_config(args, environ={"NEPHROID_OUT": "/from/env"})
    assert config.out == "/from/env"
    args = build_parser().parse_args(["table", "--config", str(cfg), "--format", "text", "--out", "x"])
    config = build_config(args, environ={"NEPHROID_OUT": "/from/env"})
    assert (config.format, config.out) == ("text", "x")


@pytest.mark.parametrize("text", ["nonsense\n", "colour=red\n", "tol=abc\n"])
def test_bad_config(tmp_path, text):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(text)
    with pytest.raises(ParameterError):
        read_config(cfg)


@pytest.mark.parametrize(
    "kw", [{"tol": 0.0}, {"tol_radius": -1.0}, {"boundary_samples": 128}, {"format": "xml"}]
)
def test_run_config_invariants(kw):
    with pytest.raises(ParameterError):
        RunConfig(**kw)
