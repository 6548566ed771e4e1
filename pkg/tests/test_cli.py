import json
from importlib.resources import files

import jsonschema
import pytest

from casimir_an.cli import main

SCHEMA = json.loads(files("casimir_an").joinpath("schema/output.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    record = json.loads(out)
    jsonschema.validate(record, SCHEMA)
    return code, record


def test_orbit(capsys):
    code, rec = run_json(capsys, "orbit", "--rank", "7", "--weight", "1,0,1,0,0,1,0")
    assert code == 0 and rec["result"]["dimension"] == 1680
    assert rec["request"]["weight"]["mu"] == [3, 2, 2, 1, 1, 1, 0, 0]
    code, rec = run_json(capsys, "orbit", "--rank", "2", "--weight", "1,0", "--list")
    assert rec["result"]["elements"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


@pytest.mark.parametrize("weight", ["-1,0", "1,0,0", "a,b"])
def test_bad_weight(capsys, weight):
    code, out, err = run(capsys, "orbit", "--rank", "2", f"--weight={weight}")
    assert code == 2 and out == "" and "error" in err


def test_chs(capsys):
    code, rec = run_json(capsys, "chs", "--rank", "2", "--weight", "0,1", "--order", "2")
    assert rec["result"]["character"] == {"mu(2)": "2", "mu(1,1)": "2"}
    code, rec = run_json(capsys, "chs", "--rank", "3", "--weight", "1,0,2", "--order", "5",
                         "--method", "both")
    assert code == 0 and rec["result"]["match"] is True
    code, rec = run_json(capsys, "chs", "--rank", "2", "--weight", "1,1", "--order", "2", "--rep")
    assert rec["result"]["character"] == {"mu(2)": "10", "mu(1,1)": "8"}


def test_cof(capsys):
    code, rec = run_json(capsys, "cof", "--rank", "3", "--weight", "1,0,0", "--order", "4")
    assert rec["result"]["cof"] == {"4": "1", "2,2": "0"}
    code, rec = run_json(capsys, "cof", "--rank", "2", "--weight", "1,1", "--order", "4",
                         "--method", "both")
    assert rec["result"]["match"] is True


def test_decompose(capsys):
    code, rec = run_json(capsys, "decompose", "--rank", "3", "--weight", "1,0,1")
    assert rec["result"]["orbits"][-1] == {"lambda": [0, 0, 0], "mu": [0, 0, 0, 0],
                                           "multiplicity": 3, "orbit_dimension": 1}
    assert rec["result"]["dimension"] == rec["result"]["weyl_dimension"] == 15


def test_eigen(capsys):
    code, rec = run_json(capsys, "eigen", "--rank", "5", "--weight", "1,0,0,0,0",
                         "--class", "4", "--norm", "default")
    assert code == 0 and rec["result"]["closed_form"] == "84"
    assert rec["result"]["free_coefficient"] == {"alpha": 5, "value": "126/5"}
    code, rec = run_json(capsys, "eigen", "--rank", "5", "--weight", "1,0,0,0,0",
                         "--class", "4", "--norm", "unit")
    assert rec["result"]["closed_form"] == "10/3"
    code, rec = run_json(capsys, "eigen", "--rank", "2", "--weight", "1,1", "--class", "2",
                         "--reference-value", "1")
    assert rec["result"]["from_cof"] == "9/4" and "closed_form" not in rec["result"]


def test_eigen_errors(capsys):
    code, _, err = run(capsys, "eigen", "--rank", "2", "--weight", "1,0", "--class", "4")
    assert code == 3 and "(N - 2)" in err
    code, _, err = run(capsys, "eigen", "--rank", "8", "--weight", "1,0,0,0,0,0,0,0",
                       "--class", "5,3")
    assert code == 2
    code, _, err = run(capsys, "eigen", "--rank", "2", "--weight", "1,0", "--class", "2,2,2",
                       "--reference-value", "1")
    assert code == 3 and "lambda_3" in err


def test_formats(capsys):
    code, out, _ = run(capsys, "orbit", "--rank", "2", "--weight", "1,0", "--format", "csv")
    assert out.splitlines()[0] == "key,value" and "result.dimension,3" in out
    code, out, _ = run(capsys, "orbit", "--rank", "2", "--weight", "1,0", "--format", "table")
    assert out.splitlines()[-1].split() == ["status", "ok"]
    code, rec = run_json(capsys, "orbit", "--rank", "2", "--weight", "1,0", "--timing")
    assert "timing" in rec


def test_verify_suites(capsys):
    code, rec = run_json(capsys, "verify", "--suite", "schur", "--order-max", "7")
    assert code == 0 and rec["result"]["failed"] == 0
    code, rec = run_json(capsys, "verify", "--suite", "orbits", "--rank-max", "4",
                         "--order-max", "5")
    assert code == 0


def test_verify_strict_and_deterministic(capsys):
    args = ["verify", "--suite", "eigen", "--order-max", "7"]
    code, lax = run(capsys, *args)[:2]
    assert code == 0
    code2, strict = run(capsys, *args, "--strict")[:2]
    assert code2 == 1
    failing = [c["name"] for c in json.loads(strict)["result"]["checks"]
               if c["status"] == "fail"]
    assert failing == ["class 4,3 N=6", "class 4,3 N=7", "class 4,3 N=8"]
    assert run(capsys, *args, "--jobs", "3")[1] == lax


def test_verify_reductions_strict(capsys):
    assert run(capsys, "verify", "--suite", "reductions")[0] == 0
    assert run(capsys, "verify", "--suite", "reductions", "--strict")[0] == 1
