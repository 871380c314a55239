import json
import os
from pathlib import Path

import pytest

import jkres

DATA = Path(os.environ.get("JKRES_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
A2_MIN = {"vectors": ["1,0", "0,1", "1,1"], "expression": {"terms": [{"denominator": [[0, 1], [1, 1], [2, 1]]}]}}


def test_commands_listed():
    assert "inverse-laplace" in jkres.commands()
    assert "nbc-basis" in jkres.commands()


def test_nbc_basis_of_a2():
    out = jkres.run("nbc-basis", A2_MIN)
    assert [b["vectors"] for b in out["basis"]] == [["1,0", "0,1"], ["1,0", "1,1"]]


def test_min_function_is_continuous():
    assert jkres.run("smoothness", A2_MIN)["class"] == 0
    text = jkres.run_text("inverse-laplace", json.dumps(A2_MIN), json.dumps({"delta_witness": "2,1"}))
    assert "chamber (2,1) +++: h2" in text


def test_file_problem_and_options():
    problem = (DATA / "a2_min.json").read_text()
    out = jkres.run("fourier", problem, gamma_witness="3,1", point="1,1")
    assert out["value"] == "1"


def test_errors_map_to_exceptions():
    with pytest.raises(jkres.ParseError, match="/vectors/1"):
        jkres.run("normalize", {"vectors": ["1,0", "0.5,1"]})
    with pytest.raises(jkres.JkresError):
        jkres.run("normalize", (DATA / "bad_not_spanning.json").read_text())
