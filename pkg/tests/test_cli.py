import json
import os
import subprocess
import sys

import pytest

from turanlab.cli import SCHEMA, build_parser

from .cli_matrix import invoke, matrix, run_matrix, write_inputs

EXPECTED_CODES = [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]


@pytest.fixture
def ws(tmp_path):
    return write_inputs(tmp_path)


def payload(argv):
    code, out, _ = invoke(argv + ["--json"])
    return code, json.loads(out)


def test_matrix_exit_codes(ws):
    results = run_matrix(ws)
    assert [c for c, _, _ in results] == EXPECTED_CODES
    for (code, out, _), argv in zip(results, matrix(ws)):
        data = json.loads(out)
        assert data["schema"] == SCHEMA and data["exit_code"] == code
        assert data["command"].split()[0] == argv[0]


def test_steiner_build_writes_file(ws):
    out = ws / "s5.hgr"
    code, data = payload(["steiner", "build", "-m", "11", "-r", "5", "-o", str(out)])
    assert code == 0 and data["blocks"] == 66 and data["certified"]
    assert out.read_text().startswith("5 11 66\n")


def test_steiner_nonexistent(ws):
    code, data = payload(["steiner", "build", "-m", "8", "-r", "3", "--no-cache"])
    assert code == 1 and "error" in data


def test_lambda_values(ws):
    assert payload(["lambda", "eval", "-i", str(ws / "k4.hgr")])[1]["value"] == "3/8"
    assert payload(["lambda", "residual", "-i", str(ws / "p3.json")])[1]["residual"] == "2/9"
    code, data = payload(["lambda", "max", "-i", str(ws / "k4.hgr"), "--restarts", "5"])
    assert abs(data["value"] - 0.375) < 1e-8 and data["certified_global"] is False


def test_lambda_max_s5(ws):
    invoke(["steiner", "build", "-m", "11", "-r", "5", "-o", str(ws / "s5.hgr")])
    code, data = payload(["lambda", "max", "-i", str(ws / "s5.hgr"), "--restarts", "50", "--seed", "7"])
    assert code == 0 and abs(data["value"] - 66 / 161051) < 1e-7


def test_search(ws):
    code, data = payload(["search", "--n", "6", "--r", "3", "--pattern", "sigma"])
    assert code == 0 and data["max_edges"] == 8 and data["witness_check"]["passed"]
    code, data = payload(["search", "--n", "7", "--r", "3", "--budget", "5"])
    assert code == 3 and not data["certified"]


def test_distance_budget(ws):
    code, out, err = invoke(["distance", "-i", str(ws / "fano.hgr"), "--base", str(ws / "fano.hgr"),
                             "--budget", "10"])
    assert code == 3 and "budget" in err and out == ""


def test_verify_clique_and_steiner(ws):
    assert payload(["verify", "-i", str(ws / "k4.hgr"), "--pattern", "clique", "--t", "4"])[0] == 1
    assert payload(["verify", "-i", str(ws / "c5.hgr"), "--pattern", "clique"])[0] == 0
    assert payload(["verify", "-i", str(ws / "fano.hgr"), "--pattern", "steiner"])[0] == 0


def test_symmetrize_outputs(ws):
    invoke(["symmetrize", "-i", str(ws / "p3.json"), "-o", str(ws / "o.json"), "--trace", str(ws / "t.json")])
    final = json.loads((ws / "o.json").read_text())
    assert final["mu"] == ["2/3", "1/3", 0]
    assert len(json.loads((ws / "t.json").read_text())["steps"]) == 1


def test_constants(ws):
    data = payload(["constants", "-m", "12", "-r", "6"])[1]
    assert data["e"] == "11/248832" and data["d"] == "11/41472"


def test_human_output(ws):
    code, out, _ = invoke(["constants", "-m", "11", "-r", "5"])
    assert code == 0 and "6/14641" in out and not out.lstrip().startswith("{")


@pytest.mark.parametrize("argv", [
    ["search", "--n", "6", "--r", "3", "--bogus"],
    ["frobnicate"],
    [],
    ["steiner", "build", "-m", "x", "-r", "3"],
    ["search", "--n", "6", "--r", "3", "--pattern", "octahedron"],
])
def test_usage_errors(argv):
    assert invoke(argv)[0] == 2


def test_input_errors(ws):
    (ws / "bad.hgr").write_text("3 5 2\n0 1 2\n")
    assert invoke(["verify", "-i", str(ws / "bad.hgr"), "--pattern", "sigma"])[0] == 2
    assert invoke(["verify", "-i", str(ws / "missing.hgr"), "--pattern", "sigma"])[0] == 2
    assert invoke(["search", "--n", "30", "--r", "3"])[0] == 2


def test_every_subcommand_has_help(capsys):
    parser = build_parser()
    commands = [["steiner", "build"], ["steiner", "verify"], ["lambda", "eval"], ["lambda", "residual"],
                ["lambda", "max"], ["lambda", "balanced"], ["symmetrize"], ["distance"], ["classify"],
                ["search"], ["verify"], ["constants"]]
    for cmd in commands:
        assert invoke(cmd + ["--help"])[0] == 0
        with pytest.raises(SystemExit):
            parser.parse_args(cmd + ["--help"])
        text = capsys.readouterr().out
        assert "--json" in text and "--seed" in text


def test_module_entry_point(ws):
    env = dict(os.environ)
    proc = subprocess.run(
        [sys.executable, "-m", "turanlab", "constants", "-m", "7", "-r", "3", "--json"],
        capture_output=True, text=True, env=env, timeout=120,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["e"] == "1/49"
