import json

import pytest
from click.testing import CliRunner

from affhur.cli import main

WORD = ["1,0:0", "0,1:0", "1,1:1"]
THOMAS = WORD + WORD  # the length-4 pure translation of the worked example


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args))


def test_roots_text(runner):
    res = run(runner, "roots", "A2")
    assert res.exit_code == 0
    assert "6 roots" in res.output
    assert "connection index: 3" in res.output


def test_roots_json(runner):
    res = run(runner, "roots", "A2", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["tool"] == "affhur" and "version" in data
    assert len(data["roots"]) == 6
    assert data["connection_index"] == 3
    assert data["highest_root"] == [1, 1]


def test_roots_a1(runner):
    res = run(runner, "roots", "A1", "--format", "json")
    assert res.exit_code == 0
    assert len(json.loads(res.output)["roots"]) == 2


def test_roots_rejects_noncrystallographic(runner):
    res = run(runner, "roots", "H3")
    assert res.exit_code == 2


def test_check_qc_positive(runner):
    res = run(runner, "check-qc", "affine:A2", *WORD, "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["verdict"] is True and data["conclusive"] is True
    assert data["witness"] is not None
    assert data["certificate"]["projected_generates"] is True


def test_check_qc_all_level_zero(runner):
    res = run(runner, "check-qc", "affine:A2", "1,0:0", "0,1:0", "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["verdict"] is False


def test_check_qc_thomas_element(runner):
    res = run(runner, "check-qc", "affine:A2", *THOMAS, "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["verdict"] is False and data["conclusive"] is True
    assert data["absolute_length"] == 4
    assert "exceeds" in data["detail"]


def test_check_qc_usage_errors(runner):
    assert run(runner, "check-qc", "A2", "1,0:0").exit_code == 2
    assert run(runner, "check-qc", "affine:A2", "9,9:0").exit_code == 2


def test_length(runner):
    res = run(runner, "length", "affine:A2", *THOMAS, "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["absolute_length"] == 4
    res2 = run(runner, "length", "A2", "1,0", "0,1", "--format", "json")
    assert json.loads(res2.output)["absolute_length"] == 2


def test_factorize(runner):
    res = run(runner, "factorize", "affine:A2", *THOMAS, "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["length"] == 4 and data["count"] == len(data["factorizations"]) > 0


def test_orbit_exhausted(runner):
    res = run(runner, "orbit", "A2", "1,0", "0,1", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["size"] == 3 and data["exhausted"] is True


def test_orbit_limits_exit_code(runner, monkeypatch):
    monkeypatch.setenv("AFFHUR_NODE_LIMIT", "10")
    res = run(runner, "orbit", "affine:A2", "1,0:0", "1,0:1", "--format", "json")
    assert res.exit_code == 3
    assert json.loads(res.output)["exhausted"] is False


def test_connect(runner):
    res = run(runner, "connect", "A2", "1,0;1,0;0,1;0,1", "0,1;0,1;1,0;1,0",
              "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["braid_word"]


def test_connect_affine_reduced(runner):
    res = run(runner, "connect", "affine:A2",
              "1,0:0;0,1:0;1,1:1", "0,1:0;1,1:-2;1,1:-1", "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["braid_word"] is not None


def test_connect_product_mismatch(runner):
    res = run(runner, "connect", "A2", "1,0;0,1", "0,1;0,1")
    assert res.exit_code == 2


def test_fiber(runner):
    res = run(runner, "fiber", "affine:A2", "1,0:0", "1,1:1", "1,1:0",
              "-K", "2", "--format", "json")
    assert res.exit_code == 0
    members = json.loads(res.output)["members"]
    assert len(members) == 5
    assert members[0][1]["level"] == -1 and members[0][2]["level"] == -2


def test_fiber_bad_pattern(runner):
    res = run(runner, "fiber", "affine:A2", "1,0:0", "0,1:1", "1,1:0")
    assert res.exit_code == 2


def test_verify_example_suite(runner):
    res = run(runner, "verify", "example-a2", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["ok"] is True
    assert all(c["ok"] for c in data["checks"])


def test_verify_unknown_suite(runner):
    assert run(runner, "verify", "nope").exit_code == 2
