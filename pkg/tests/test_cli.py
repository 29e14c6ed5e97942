import json

import pytest

from genant.cli import main


def out_lines(capsys):
    return capsys.readouterr().out.splitlines()


def test_simulate_then_detect(tmp_path, capsys):
    rec = tmp_path / "run.json"
    assert main(["simulate", "--rule", "LLLR", "--uniform", "--steps", "313",
                 "--out", str(rec)]) == 0
    lines = out_lines(capsys)
    cfg = json.loads(lines[0].split(": ", 1)[1])
    assert cfg["rule"] == "LLLR" and cfg["steps"] == 313 and cfg["ant"] == [0, 0, "Up"]
    data = json.loads(rec.read_text())
    assert len(data["trace"]) == 313 and len(data["trajectory"]) == 313

    assert main(["detect", "--in", str(rec)]) == 0
    report = json.loads(out_lines(capsys)[-1])
    assert report["period"] == 52
    assert report["classification"] == "LLLR-simple-52"


def test_simulate_zero_steps(tmp_path):
    rec = tmp_path / "run.json"
    assert main(["simulate", "--rule", "LLLR", "--uniform", "--steps", "0", "--out", str(rec)]) == 0
    assert json.loads(rec.read_text())["trace"] == ""


def test_bad_rule(tmp_path, capsys):
    assert main(["simulate", "--rule", "LXR", "--steps", "3", "--out", str(tmp_path / "x")]) == 2
    assert "'X'" in capsys.readouterr().err


def test_bad_pattern(tmp_path, capsys):
    bad = tmp_path / "p.txt"
    bad.write_text("1 1 0 0\n7\n")
    assert main(["simulate", "--pattern", str(bad), "--steps", "3",
                 "--out", str(tmp_path / "x")]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["simulate", "--pattern", str(tmp_path / "missing.txt"), "--steps", "3",
                 "--out", str(tmp_path / "x")]) == 2


def test_pattern_seeded_run(tmp_path, capsys):
    pat = tmp_path / "p.txt"
    pat.write_text("# one cell\n1 1 0 0\nant: 0 0 right\n3\n")
    rec = tmp_path / "run.json"
    assert main(["simulate", "--pattern", str(pat), "--steps", "1", "--out", str(rec)]) == 0
    data = json.loads(rec.read_text())
    assert data["trace"] == "3"
    assert data["final"]["position"] == [0, -1]  # right turn from Right faces Down


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as info:
        main(["simulate", "--steps", "1", "--out", "x", "--bogus"])
    assert info.value.code == 2


def test_detect_inline(capsys):
    assert main(["detect", "--rule", "LLLR", "--uniform", "--horizon", "2000"]) == 0
    report = json.loads(out_lines(capsys)[-1])
    assert report["period"] == 52 and report["classification"] == "LLLR-simple-52"
    assert main(["detect", "--rule", "LR", "--uniform", "--horizon", "13000"]) == 0
    assert json.loads(out_lines(capsys)[-1])["period"] == 104
    assert main(["detect", "--horizon", "50"]) == 0
    assert out_lines(capsys)[-1] == "none"


def test_detect_io_error(tmp_path):
    assert main(["detect", "--in", str(tmp_path / "nope.json")]) == 1


def test_experiment_csv(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["experiment", "--rule", "LLLR", "--trials", "30", "--master-seed", "3"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b), "--workers", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
    rows = [r for r in a.read_text().splitlines() if not r.startswith("#")]
    assert rows[0] == "trial,label,entry_step,period,drift_a,drift_b"
    assert len(rows) == 31
    cfg = json.loads(out_lines(capsys)[0].split(": ", 1)[1])
    assert cfg["horizon"] == 100_000 and cfg["pattern_width"] == 11


def test_experiment_zero_trials(tmp_path):
    out = tmp_path / "e.csv"
    assert main(["experiment", "--trials", "0", "--out", str(out)]) == 0
    assert out.read_text() == "trial,label,entry_step,period,drift_a,drift_b\n"


def test_experiment_anomaly_file(tmp_path):
    out = tmp_path / "e.csv"
    assert main(["experiment", "--rule", "LLLLLR", "--trials", "3", "--out", str(out)]) == 0
    odd = json.loads((tmp_path / "e.csv.anomalies.json").read_text())
    assert [o["trial"] for o in odd] == [0, 1, 2]


def test_render(tmp_path):
    ppm = tmp_path / "a.ppm"
    assert main(["render", "--rule", "LLLR", "--steps", "313", "--scale", "1",
                 "--out", str(ppm)]) == 0
    assert ppm.read_bytes().startswith(b"P6\n17 18\n255\n")
    assert main(["render", "--steps", "0", "--scale", "1", "--viewport", "0", "0", "0", "0",
                 "--out", str(ppm)]) == 0
    assert ppm.read_bytes() == b"P6\n1 1\n255\n\xff\x00\x00"  # the ant sits on the origin
    txt = tmp_path / "a.txt"
    assert main(["render", "--steps", "1", "--text", "--viewport", "-1", "0", "0", "0",
                 "--out", str(txt)]) == 0
    assert txt.read_text() == "01\nA\n"
    assert main(["render", "--steps", "1", "--viewport", "1", "2", "--out", str(ppm)]) == 2


def test_render_from_record(tmp_path):
    rec = tmp_path / "run.json"
    main(["simulate", "--steps", "313", "--out", str(rec)])
    ppm = tmp_path / "b.ppm"
    assert main(["render", "--in", str(rec), "--scale", "1", "--out", str(ppm)]) == 0
    assert ppm.read_bytes().startswith(b"P6\n17 18\n255\n")


def test_catalog(tmp_path, capsys):
    assert main(["catalog", "--list"]) == 0
    lines = [line for line in out_lines(capsys) if not line.startswith("#")]
    assert len(lines) >= 7
    assert main(["catalog", "--verify"]) == 0
    out = capsys.readouterr().out
    assert "LLLR-simple-52: length=52 primitive_period=52" in out
    assert "LLLR-complex-156: length=156 primitive_period=156" in out
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert main(["catalog", "--list", "--catalog", str(empty)]) == 2
