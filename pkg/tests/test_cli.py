import io
import json
import subprocess
import sys

import pytest

from alglie import catalog, serialize
from alglie.cli import run


def call(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def h_file(tmp_path):
    p = tmp_path / "h.json"
    code, out, _ = call("catalog", "heisenberg4", "--alpha", "1", "--beta", "1")
    assert code == 0
    p.write_text(out)
    return p


def test_catalog_heisenberg(h_file):
    d = json.loads(h_file.read_text())
    assert d["dim"] == 3 and len(d["basis"]) == 3
    assert serialize.lie_from_json(d).space == catalog.heisenberg_h(1, 1).space


def test_check_refutes_h(h_file):
    code, out, _ = call("check", "--basis", str(h_file))
    d = json.loads(out)
    assert code == 1
    assert d["kind"] == "NotAlgebraic"
    assert serialize.qmatrix_from_json(d["witness"]["element"]) == catalog.heisenberg_h(1, 1).user_basis[0]
    assert d["seed"] == 0


def test_check_closed_m(tmp_path):
    code, out, _ = call("catalog", "hull-m", "--alpha", "1/2", "--beta", "1/2")
    p = tmp_path / "m.json"
    p.write_text(out)
    code, out, _ = call("check", "--basis", str(p), "--samples", "64", "--seed", "4")
    d = json.loads(out)
    assert code == 0 and d["kind"] == "ClosedOnSamples" and d["samples"] == 4 + 6 + 64 and d["seed"] == 4


def test_jordan_zero(tmp_path):
    p = tmp_path / "z.json"
    p.write_text(json.dumps({"dim": 3, "entries": [["0"] * 3] * 3}))
    code, out, _ = call("jordan", "--matrix", str(p))
    d = json.loads(out)
    assert code == 0
    zero = {"dim": 3, "entries": [["0"] * 3] * 3}
    assert d == {"semisimple": zero, "nilpotent": zero}


def test_stdin_input(monkeypatch):
    x1 = serialize.qmatrix_to_json(catalog.heisenberg_h(1, 1).user_basis[0])
    code, out, _ = call("replica", "--matrix", "-", stdin=json.dumps(x1), monkeypatch=monkeypatch)
    d = json.loads(out)
    assert code == 0 and len(d["total"]) == 2 and d["lattice"] == [[1, 0]]


def test_replica_split_failure(tmp_path):
    p = tmp_path / "rot.json"
    p.write_text(json.dumps({"dim": 2, "entries": [["0", "-1"], ["1", "0"]]}))
    code, out, _ = call("replica", "--matrix", str(p))
    assert code == 1 and json.loads(out)["error"]["type"] == "SplitFailure"


def test_hull_and_decompose(h_file):
    code, out, _ = call("hull", "--basis", str(h_file))
    d = json.loads(out)
    assert code == 0 and d["valid"] and d["hull"]["dim"] == 4 and len(d["adjoined"]) == 1
    code, out, _ = call("decompose", "--basis", str(h_file))
    assert code == 1 and json.loads(out)["valid"] is False


def test_hull_round_limit(h_file):
    code, out, _ = call("hull", "--basis", str(h_file), "--max-rounds", "0")
    assert code == 1 and json.loads(out)["valid"] is False


def test_decompose_m(tmp_path):
    _, out, _ = call("catalog", "hull-m", "--alpha", "2", "--beta", "-1")
    p = tmp_path / "m.json"
    p.write_text(out)
    code, out, _ = call("decompose", "--basis", str(p))
    d = json.loads(out)
    assert code == 0 and d["valid"] and len(d["nil_part"]) == 3 and len(d["semisimple_part"]) == 1


@pytest.mark.parametrize("argv,kind", [
    (("catalog", "n1", "--alpha", "1", "--beta", "1"), "subspace"),
    (("catalog", "a1", "--alpha", "1", "--beta", "1"), "subspace"),
    (("catalog", "x4", "--alpha", "1", "--beta", "1"), "matrix"),
    (("catalog", "model-L", "--n", "5"), "tensor"),
    (("catalog", "filiform", "--alpha", "1", "--beta", "1", "--a", "1/3", "--n", "6"), "filiform"),
])
def test_catalog_roundtrips(argv, kind):
    code, out, _ = call(*argv)
    assert code == 0
    d = json.loads(out)
    if kind == "subspace":
        assert serialize.subspace_from_json(d).dim == d["dim"]
    elif kind == "matrix":
        assert serialize.qmatrix_to_json(serialize.qmatrix_from_json(d)) == d
    elif kind == "tensor":
        assert serialize.structure_constants_from_json(d) == catalog.model_Ln(5)
    else:
        assert d["comparison_report"]["confirmed"] and d["generated"]["dim"] == 6


def test_filiform_output_feeds_check(tmp_path):
    _, out, _ = call("catalog", "filiform", "--alpha", "1", "--beta", "1", "--a", "1", "--n", "5")
    p = tmp_path / "f.json"
    p.write_text(out)
    code, out, _ = call("check", "--basis", str(p))
    assert code == 1 and json.loads(out)["kind"] == "NotAlgebraic"


def test_domain_errors_are_json():
    code, out, err = call("catalog", "heisenberg4", "--alpha", "1", "--beta", "-1")
    assert code == 1 and json.loads(out)["error"]["type"] == "ParamDomain" and err == ""
    code, out, _ = call("catalog", "filiform", "--alpha", "1", "--beta", "1", "--a", "1", "--n", "3")
    assert code == 1 and "heisenberg_h" in json.loads(out)["error"]["message"]


def test_not_closed_basis_is_domain_error(tmp_path):
    h = serialize.lie_to_json(catalog.heisenberg_h(1, 1))
    p = tmp_path / "open.json"
    p.write_text(json.dumps({"dim": 2, "basis": h["basis"][:2]}))
    code, out, _ = call("check", "--basis", str(p))
    assert code == 1 and json.loads(out)["error"]["type"] == "NotClosed"


@pytest.mark.parametrize("argv", [
    (),
    ("frobnicate",),
    ("jordan",),
    ("check", "--basis", "/nonexistent/file.json"),
    ("catalog", "heisenberg4", "--alpha", "x", "--beta", "1"),
    ("catalog", "heisenberg4", "--alpha", "1"),
    ("catalog", "filiform", "--alpha", "1", "--beta", "1"),
    ("catalog", "model-L", "--n", "2"),
    ("check", "--basis", "x", "--samples", "-1"),
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_malformed_input(tmp_path):
    p = tmp_path / "bad.json"
    for text in ("{not json", json.dumps({"dim": 2, "entries": [["1"]]}), json.dumps([1, 2])):
        p.write_text(text)
        code, out, err = call("jordan", "--matrix", str(p))
        assert code == 2 and out == "" and err


def test_determinism(h_file):
    a = call("check", "--basis", str(h_file), "--seed", "7")[1]
    b = call("check", "--basis", str(h_file), "--seed", "7")[1]
    assert a == b
    a = call("hull", "--basis", str(h_file), "--seed", "3")[1]
    b = call("hull", "--basis", str(h_file), "--seed", "3")[1]
    assert a == b


def test_module_entry_point(h_file):
    proc = subprocess.run([sys.executable, "-m", "alglie", "check", "--basis", str(h_file)], capture_output=True, text=True)
    assert proc.returncode == 1 and json.loads(proc.stdout)["kind"] == "NotAlgebraic"


def test_verify_paper_report_shape():
    code, out, _ = call("verify-paper", "--seed", "0")
    d = json.loads(out)
    assert [c["criterion"] for c in d["claims"]] == list(range(1, 10))
    assert d["passed"] == all(c["passed"] for c in d["claims"])
    assert code == int(not d["passed"])
    assert out == call("verify-paper", "--seed", "0")[1]


@pytest.mark.parametrize("seed", range(10))
def test_verify_paper_exit_zero(seed):
    # expected to stay red: the n = 4 minimal polynomial law only holds for alpha == beta
    code, out, _ = call("verify-paper", "--seed", str(seed))
    failing = [c["criterion"] for c in json.loads(out)["claims"] if not c["passed"]]
    assert code == 0, f"failing criteria: {failing}"
