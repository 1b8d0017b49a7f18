import json

import pytest

from lsv import cli
from lsv.roots import DynkinType, enumerate_roots, parabolic_grading


def run(capsys, argv, env=None, monkeypatch=None):
    if env is not None:
        assert monkeypatch is not None
        for k, v in env.items():
            monkeypatch.setenv(k, v)
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_json(capsys):
    code, out, _ = run(capsys, ["roots", "--type", "A", "--rank", "1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["n_roots"] == 2
    assert len(doc["rows"]) == 2


def test_roots_counts(capsys):
    code, out, _ = run(capsys, ["roots", "--type", "B", "--rank", "2"])
    assert code == 0
    assert json.loads(out)["meta"]["n_roots"] == 8
    code, out, _ = run(capsys, ["roots", "--type", "E", "--rank", "8"])
    assert code == 0
    assert json.loads(out)["meta"]["n_roots"] == 240


def test_roots_listing_is_sorted_and_deterministic(capsys):
    code, out1, _ = run(capsys, ["roots", "--type", "D", "--rank", "4"])
    code2, out2, _ = run(capsys, ["roots", "--type", "D", "--rank", "4"])
    assert code == code2 == 0
    assert out1 == out2
    rows = json.loads(out1)["rows"]
    heights = [r["height"] for r in rows]
    assert heights == sorted(heights)


def test_invalid_inputs_exit_1(capsys):
    assert run(capsys, ["roots", "--type", "Z", "--rank", "3"])[0] == 1
    assert run(capsys, ["roots", "--type", "A", "--rank", "0"])[0] == 1
    assert run(capsys, ["roots", "--type", "A"])[0] == 1          # missing flag
    assert run(capsys, ["no-such-command"])[0] == 1
    assert run(capsys, ["table1", "--max-rank", "1"])[0] == 1
    assert run(capsys, ["grading", "--type", "A", "--rank", "2", "--indices", "x"])[0] == 1
    assert run(capsys, ["energy", "--group", "mystery"])[0] == 1
    assert run(capsys, ["rayleigh", "--n", "1"])[0] == 1


def test_grading_matches_library(capsys):
    code, out, _ = run(capsys, ["grading", "--type", "B", "--rank", "2", "--indices", "1"])
    assert code == 0
    doc = json.loads(out)
    grading = parabolic_grading(enumerate_roots(DynkinType("B", 2)), {1})
    assert {int(r["level"]): r["count"] for r in doc["rows"]} == {
        k: len(v) for k, v in grading.items()
    }


def test_table1_passes_and_renders(capsys):
    code, out, _ = run(capsys, ["table1", "--max-rank", "8", "--format", "markdown"])
    assert code == 0
    assert "| SU(5) | 5 | 5 | true |" in out
    assert "| Sp(3) | 4 | 4 | true |" in out
    assert "| G2 | 4 | 4 | true |" in out


def test_table1_detects_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(cli, "n_g_closed_form", lambda d: 999)
    code, out, _ = run(capsys, ["table1", "--max-rank", "3"])
    assert code == 2
    assert json.loads(out)["meta"]["all_match"] is False


def test_stability_report_summary(capsys, monkeypatch):
    code, out, _ = run(capsys, ["stability-report", "--max-rank", "16"],
                       env={"LSV_THREADS": "1"}, monkeypatch=monkeypatch)
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["summary_match"] is True
    expected = sorted([f"C{n}" for n in range(8, 17)] + ["E8", "F4", "G2"])
    assert doc["meta"]["excluded"] == expected
    rows = {r["type"]: r for r in doc["rows"]}
    assert rows["C8"]["margins"] == "0"
    assert rows["A16"]["witness"] == 1
    assert rows["G2"]["type_H"] is False


def test_stability_report_thread_count_does_not_change_output(capsys, monkeypatch):
    monkeypatch.setenv("LSV_THREADS", "1")
    code1, out1, _ = run(capsys, ["stability-report", "--max-rank", "10"])
    monkeypatch.setenv("LSV_THREADS", "4")
    code2, out2, _ = run(capsys, ["stability-report", "--max-rank", "10"])
    assert code1 == code2 == 0
    d1, d2 = json.loads(out1), json.loads(out2)
    d1["meta"].pop("threads"), d2["meta"].pop("threads")
    assert d1 == d2


def test_bad_thread_env_exits_1(capsys, monkeypatch):
    monkeypatch.setenv("LSV_THREADS", "zero")
    assert run(capsys, ["stability-report", "--max-rank", "4"])[0] == 1


def test_family_filter(capsys):
    code, out, _ = run(capsys, ["table1", "--max-rank", "9", "--families", "CE"])
    assert code == 0
    types = [r["type"] for r in json.loads(out)["rows"]]
    assert types == ["C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "E6", "E7", "E8"]


def test_energy_json_and_exit_codes(capsys):
    argv = ["energy", "--group", "su2", "--degree", "1", "--mesh", "24x48",
            "--t-steps", "21", "--check-cone"]
    code, out, _ = run(capsys, argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["identity_ok"] is True
    assert doc["meta"]["cone_witness"] is True
    assert doc["meta"]["cone_value"] < 0
    assert len(doc["rows"]) == 21
    # unreachable tolerance turns the same run into a verification failure
    code2, out2, _ = run(capsys, argv + ["--tol", "1e-18"])
    assert code2 == 2
    assert json.loads(out2)["meta"]["identity_ok"] is False


def test_energy_degree_zero_flat(capsys):
    code, out, _ = run(capsys, ["energy", "--group", "su2", "--degree", "0",
                                "--mesh", "16x32", "--t-steps", "9"])
    assert code == 0
    doc = json.loads(out)
    assert all(abs(r["e_measured"]) < 1e-12 for r in doc["rows"])


def test_rayleigh_output(capsys):
    code, out, _ = run(capsys, ["rayleigh", "--n", "2", "--decades=-2,2",
                                "--cells-per-decade", "16", "--steps", "2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["target"] == 0.25
    assert doc["meta"]["infimum"] >= 0.25
    assert len(doc["rows"]) == 2


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"type": "B", "rank": 2, "format": "json"}))
    code, out, _ = run(capsys, ["roots", "--type", "B", "--rank", "2",
                                "--config", str(cfg)])
    assert code == 0
    assert json.loads(out)["meta"]["n_roots"] == 8
    # flag wins over config
    code, out, _ = run(capsys, ["roots", "--type", "A", "--rank", "3",
                                "--config", str(cfg)])
    assert json.loads(out)["meta"]["dynkin"] == "A3"
    # config alone fills required-but-absent values is not supported for
    # argparse-required flags; optional flags do fall back:
    cfg2 = tmp_path / "cfg2.json"
    cfg2.write_text(json.dumps({"max-rank": 3}))
    code, out, _ = run(capsys, ["table1", "--config", str(cfg2)])
    assert code == 0
    assert [r["type"] for r in json.loads(out)["rows"]][-1] == "G2"
    assert all(int(r["type"][1:]) <= 3 for r in json.loads(out)["rows"])


def test_out_writes_file(capsys, tmp_path):
    path = tmp_path / "roots.csv"
    code, out, _ = run(capsys, ["roots", "--type", "A", "--rank", "2",
                                "--format", "csv", "--out", str(path)])
    assert code == 0
    assert out == ""
    text = path.read_text()
    assert text.splitlines()[-1] == "1 1,2"


def test_version_flag(capsys):
    assert run(capsys, ["--version"])[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["energy", "--group", "su2", "--degree", "1", "--mesh", "16x32", "--t-steps", "9"],
        ["rayleigh", "--n", "2", "--decades=-2,2", "--cells-per-decade", "16", "--steps", "2"],
        ["stability-report", "--max-rank", "8", "--format", "csv"],
    ],
)
def test_float_outputs_are_byte_identical_across_runs(capsys, argv):
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_csv_floats_are_12_digits(capsys):
    code, out, _ = run(capsys, ["rayleigh", "--n", "3", "--decades=-2,2",
                                "--cells-per-decade", "16", "--steps", "1",
                                "--format", "csv"])
    assert code == 0
    line = [ln for ln in out.splitlines() if ln.startswith("# infimum")][0]
    mantissa = line.split("=")[1].strip().replace(".", "").replace("-", "").lstrip("0")
    assert len(mantissa) <= 12
