import json

import pytest

from ordfuzz.cli import run

GRADES = ["Poor", "Fair", "Good", "Excellent"]


@pytest.fixture
def workspace(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "columns": [{"name": "a", "labels": GRADES, "probabilities": [0.1, 0.3, 0.4, 0.2]},
                    {"name": "b", "labels": GRADES, "probabilities": [0.2, 0.2, 0.3, 0.3]}],
        "seed": 4,
    }))
    data = tmp_path / "data.csv"
    assert run(["synth", "--config", str(cfg), "--n", "300", "--out", str(data)]) == 0
    return tmp_path, cfg, data


def test_synth_respects_config_probabilities(workspace):
    _, _, data = workspace
    lines = data.read_text().splitlines()
    assert lines[0] == "a,b"
    assert len(lines) == 301


def test_cluster_json_and_csv(workspace, capsysbinary):
    _, cfg, data = workspace
    assert run(["cluster", str(data), "--config", str(cfg)]) == 0
    doc = json.loads(capsysbinary.readouterr().out)
    assert len(doc["mbfcm"]) == 300 and "baseline" not in doc
    assert run(["cluster", str(data), "--config", str(cfg), "--format", "csv"]) == 0
    lines = capsysbinary.readouterr().out.decode().splitlines()
    assert len(lines) == 300
    assert all(ln.split(",")[1] in ("crisp", "fuzzy") for ln in lines)


def test_fit_and_plotdata(workspace, capsysbinary):
    _, cfg, data = workspace
    assert run(["fit", str(data), "--config", str(cfg)]) == 0
    doc = json.loads(capsysbinary.readouterr().out)
    assert [d["name"] for d in doc["model"]] == ["a", "b"]
    assert run(["plotdata", str(data), "--config", str(cfg)]) == 0
    out = capsysbinary.readouterr().out.decode().splitlines()
    assert len(out) == 1 + 2 * 4


def test_compare_flags(workspace, tmp_path):
    _, cfg, data = workspace
    out = tmp_path / "r.json"
    assert run(["compare", str(data), "--config", str(cfg), "--beta", "1.5",
                "--baseline-encoding", "ranks", "--metric", "manhattan",
                "--seed", "9", "--out", str(out)]) == 0
    meta = json.loads(out.read_text())["metadata"]
    assert meta["baseline"]["beta"] == 1.5
    assert meta["baseline"]["encoding"] == "ranks"
    assert meta["metric"] == "manhattan" and meta["seed"] == 9


def test_exit_codes(workspace, tmp_path):
    _, cfg, data = workspace
    bad_cfg = tmp_path / "bad.json"
    bad_cfg.write_text("[]")
    assert run(["cluster", str(data), "--config", str(bad_cfg)]) == 2
    bad_csv = tmp_path / "bad.csv"
    bad_csv.write_text("a,b\nFair,Awesome\n")
    assert run(["cluster", str(bad_csv), "--config", str(cfg)]) == 3
    thin = tmp_path / "thin.csv"
    thin.write_text("a,b\nFair,Good\nGood,Fair\n")
    assert run(["cluster", str(thin), "--config", str(cfg)]) == 4
    assert run(["cluster", str(thin), "--config", str(cfg), "--smoothing", "0.5"]) == 0
    assert run(["synth", "--config", str(cfg), "--n", "0"]) == 2
    with pytest.raises(SystemExit) as exc:
        run(["cluster", str(data)])
    assert exc.value.code == 2
