import json
from pathlib import Path

import pytest

from fracdec.cli import main, tables_data

FIXTURES = Path(__file__).parent / "fixtures"
PARAMS = FIXTURES / "desk_params.json"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_radius_first_example(capsys):
    code, out, _ = run(capsys, "radius", "--n", 31, "--k", 4, "--l", 5, "--m", 3, "--json")
    d = json.loads(out)
    assert code == 0
    assert d["tau_alpha"]["floor"] == 12 and d["tau_p_formula"]["floor"] == 16


def test_radius_condition_warning(capsys):
    code, out, _ = run(capsys, "radius", "--n", 31, "--k", 6, "--l", 5, "--m", 2)
    assert code == 0 and "rate condition fails" in out


def test_radius_exceeds_classical(capsys):
    _, out, _ = run(capsys, "radius", "--n", 31, "--k", 6, "--l", 5, "--m", 4, "--sizes", "2,2,2,2")
    assert "exceeds classical radius" in out


def test_radius_bad_alpha(capsys):
    code, _, err = run(capsys, "radius", "--n", 31, "--k", 6, "--l", 5, "--m", 4, "--alpha", "1/100")
    assert code == 2 and "alpha" in err


@pytest.mark.parametrize("example,count", [(1, 4), (2, 3)])
def test_tables_match(capsys, example, count):
    code, out, _ = run(capsys, "tables", "--example", example)
    assert code == 0
    assert out.count(" match") == count and "MISMATCH" not in out
    data = tables_data(example)
    assert all(b["ratio_printed_to_exact"] > 0 for b in data["bounds"])


def test_tables_unknown_example(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["tables", "--example", "3"])
    assert exc.value.code == 2


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["radius", "--n", "31", "--k", "4", "--l", "5", "--m", "3", "--colour"])
    assert exc.value.code == 2


def test_clean_pipeline(tmp_path, capsys):
    cw, pw, res = tmp_path / "cw.json", tmp_path / "pw.json", tmp_path / "res.json"
    msg = tmp_path / "msg.json"
    msg.write_text(json.dumps({"message": [1234, 77]}))
    assert main(["encode", "--params", str(PARAMS), "--message", str(msg), "--out", str(cw)]) == 0
    assert main(["download", "--in", str(cw), "--out", str(pw)]) == 0
    assert main(["decode", "--in", str(pw), "--out", str(res)]) == 0
    out = json.loads(res.read_text())
    assert out["status"] == "ok" and out["message"] == [1234, 77] and out["t"] == 0


def test_corrupted_pipeline_regression(tmp_path):
    cw, rx, pw, res = (tmp_path / f for f in ("cw.json", "rx.json", "pw.json", "res.json"))
    assert main(["encode", "--params", str(PARAMS), "--seed", "7", "--out", str(cw)]) == 0
    assert main(["corrupt", "--in", str(cw), "--t", "7", "--seed", "11", "--out", str(rx)]) == 0
    assert len(json.loads(rx.read_text())["error_positions"]) == 7
    assert main(["download", "--in", str(rx), "--out", str(pw)]) == 0
    assert main(["decode", "--in", str(pw), "--out", str(res)]) == 0
    got = json.loads(res.read_text())
    assert got["message"] == json.loads(cw.read_text())["message"]
    assert got == json.loads((FIXTURES / "desk_t7_seed7_11_decode.json").read_text())


def test_download_symbol_count(tmp_path):
    cw, pw = tmp_path / "cw.json", tmp_path / "pw.json"
    main(["encode", "--params", str(PARAMS), "--seed", "1", "--out", str(cw)])
    main(["download", "--in", str(cw), "--out", str(pw)])
    d = json.loads(pw.read_text())
    assert d["m"] == 2 and d["n"] == 15
    assert sum(len(r) for r in d["rows"]) == 30


def test_decode_failure_exit_code(tmp_path, capsys):
    cw, rx, pw, res = (tmp_path / f for f in ("cw.json", "rx.json", "pw.json", "res.json"))
    main(["encode", "--params", str(PARAMS), "--seed", "7", "--out", str(cw)])
    main(["corrupt", "--in", str(cw), "--t", "12", "--seed", "3", "--out", str(rx)])
    main(["download", "--in", str(rx), "--out", str(pw)])
    code = main(["decode", "--in", str(pw), "--out", str(res)])
    got = json.loads(res.read_text())
    assert code == 1 and got["status"] == "failure" and got["reason"]


def test_truncated_file(tmp_path, capsys):
    cw, pw = tmp_path / "cw.json", tmp_path / "pw.json"
    main(["encode", "--params", str(PARAMS), "--seed", "1", "--out", str(cw)])
    main(["download", "--in", str(cw), "--out", str(pw)])
    text = pw.read_text()
    pw.write_text(text[: len(text) // 2])
    assert main(["decode", "--in", str(pw)]) == 2
    # well-formed JSON but a row is missing
    d = json.loads(text)
    d["rows"] = d["rows"][:1]
    pw.write_text(json.dumps(d))
    assert main(["decode", "--in", str(pw)]) == 2


def test_wrong_kind(tmp_path, capsys):
    cw = tmp_path / "cw.json"
    main(["encode", "--params", str(PARAMS), "--seed", "1", "--out", str(cw)])
    assert main(["decode", "--in", str(cw)]) == 2


def test_simulate_writes_files(tmp_path, capsys):
    prefix = tmp_path / "sim"
    code, out, _ = run(capsys, "simulate", "--config", FIXTURES / "desk_sim.json",
                       "--trials", 20, "--out", prefix)
    assert code == 0
    assert (tmp_path / "sim.json").exists() and (tmp_path / "sim.csv").exists()
    report = json.loads((tmp_path / "sim.json").read_text())
    # flags beat the file
    assert report["config"]["trials"] == 20
    assert [r["t"] for r in report["rows"]] == [6, 7, 8]
    assert out == (tmp_path / "sim.csv").read_text()


def test_simulate_seed_override(tmp_path, capsys):
    run(capsys, "simulate", "--config", FIXTURES / "desk_sim.json", "--trials", 5,
        "--seed", 99, "--out", tmp_path / "a")
    assert json.loads((tmp_path / "a.json").read_text())["config"]["seed"] == 99


def test_simulate_missing_config(tmp_path, capsys):
    code, _, err = run(capsys, "simulate", "--config", tmp_path / "nope.json", "--out", tmp_path / "x")
    assert code == 2 and "cannot read" in err


def test_simulate_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"field": {"p": 2}}))
    code, _, _ = run(capsys, "simulate", "--config", cfg, "--out", tmp_path / "x")
    assert code == 2
