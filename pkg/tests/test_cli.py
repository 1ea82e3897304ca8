import io
import json

import pytest

from outerlab.lab.cli import run
from outerlab.lab.config import ExperimentConfig, load_config
from outerlab.errors import InvalidInput


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, (json.loads(out.getvalue()) if out.getvalue() else None)


def test_dist_fixture():
    code, rep = call("dist", "--fixture", "two-roses")
    assert code == 0
    r = rep["result"]
    assert (r["forward"], r["backward"], r["product"]) == ("4/3", "3/2", "2/1")


def test_dist_inline_json():
    from outerlab.outerspace import rose

    g = rose(2).dumps()
    code, rep = call("dist", g, "rose-half")
    assert code == 0 and rep["result"]["product"] == "1/1"


def test_primitive():
    code, rep = call("primitive", "aab")
    assert code == 0 and rep["result"]["primitive"] and set(rep["result"]["basis"]) == {"a", "aab"}
    code, rep = call("primitive", "abAB")
    assert code == 0 and not rep["result"]["primitive"]


def test_common_factor():
    code, rep = call("common-factor", "a", "b", "--rank", "3")
    assert code == 0 and rep["result"]["kind"] == "contained"


def test_candidates_csv(tmp_path):
    out = tmp_path / "c.csv"
    code, rep = call("candidates", "theta", "--csv", str(out))
    assert code == 0 and len(rep["result"]["candidates"]) == 3
    assert out.read_text().splitlines()[0] == "tag,loop,class,length"


def test_min():
    code, rep = call("min", "a:1,b:1", "--eps", "1/10")
    assert code == 0 and rep["result"]["value"] == "1/5"


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["dist", "--fixture", "nope"],
    ["dist", "rose-half", "{not json"],
    ["primitive", "axb"],
    ["min", "a:1", "--eps", "3/5"],
])
def test_invalid_input_exit_2(argv, capsys):
    assert run(argv, stdout=io.StringIO()) == 2


def test_bad_config(tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("unknown_key: 1\n")
    assert run(["axis", "--config", str(cfg)], stdout=io.StringIO()) == 2
    cfg.write_text("eps: 0\n")
    assert run(["axis", "--config", str(cfg)], stdout=io.StringIO()) == 2


def test_reports_are_byte_identical(tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("schottky_k: 2\nschottky_L: 3\n")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["schottky", "--config", str(cfg), "--out", str(a)]) == 0
    assert run(["schottky", "--config", str(cfg), "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a.json.meta").exists()


def test_axis_report(tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("grid: [-1, 1, 1/2]\n")
    csv = tmp_path / "axis.csv"
    code, rep = call("axis", "--config", str(cfg), "--csv", str(csv))
    assert code == 0 and len(rep["result"]["points"]) == 5
    assert rep["config"]["grid"] == ["-1/1", "1/1", "1/2"] and rep["config_hash"]
    assert csv.read_text().startswith("t,value,systole,d_to_previous")


def test_morse_zero_chains_exit_4(tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("morse_K: 1\nmorse_budget: 2\ngrid: [-2, 2, 1/2]\n")
    code, rep = call("morse-test", "--config", str(cfg))
    assert code == 4 and rep["verdict"] == "inconclusive"
    assert rep["result"]["morse"]["certified"] == 0


def test_config_round_trip():
    cfg = ExperimentConfig(seed=7)
    again = load_config(json.dumps(cfg.to_dict()))
    assert again == cfg and again.digest() == cfg.digest()
    assert ExperimentConfig().digest() != cfg.digest()
    with pytest.raises(InvalidInput):
        load_config("- a list\n")
    with pytest.raises(InvalidInput):
        load_config("B: 1\n")
