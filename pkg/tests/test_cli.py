import json
import sys

import pytest

from vertexcalc.cli import main, partition_arg


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_partition_arg_parsing():
    assert partition_arg("2,1") == (2, 1)
    assert partition_arg("1,2") == (2, 1)
    assert partition_arg("0") == ()
    assert partition_arg("()") == ()
    with pytest.raises(Exception):
        partition_arg("a,b")


def test_compute_one_leg(capsys):
    code, out, _ = run(capsys, "compute", "w1", "--mu", "1")
    assert code == 0
    assert out.strip() == "t / (t^2 - 1)"


def test_compute_two_leg(capsys):
    code, out, _ = run(capsys, "compute", "w2", "--mu1", "1", "--mu2", "1")
    assert code == 0
    assert out.strip() == "(q^2 - q + 1) / (q^2 - 2*q + 1)"


def test_compute_f_anchor(capsys):
    code, out, _ = run(capsys, "compute", "f", "--mu1", "1", "--mu2", "1")
    assert code == 0
    assert out.strip() == "q + q^-1"


def test_compute_multiset(capsys):
    code, out, _ = run(capsys, "compute", "multiset", "--mu1", "2,1", "--mu2", "0")
    assert code == 0
    assert out.strip() == "[(1,-1),(0,-1),(-1,-1)]"


def test_compute_expansions(capsys):
    code, out, _ = run(capsys, "compute", "w1", "--mu", "1",
                       "--expand", "at_zero", "--order", "7")
    assert code == 0
    assert out.strip() == "-t - t^3 - t^5 - t^7 + O(t^8)"
    code, out, _ = run(capsys, "compute", "w1", "--mu", "1",
                       "--expand", "at_infinity", "--order", "7")
    assert code == 0
    assert out.strip() == "t^-1 + t^-3 + t^-5 + t^-7 + O(t^-8)"


def test_compute_json_shape(capsys, tmp_path):
    path = tmp_path / "w1.json"
    code, out, _ = run(capsys, "compute", "w1", "--mu", "1",
                       "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["kind"] == "w1"
    assert doc["units"] == "t"
    assert doc["params"]["mu"] == [1]
    assert set(doc["value"]) == {"num", "den"}


def test_compute_k_series(capsys):
    code, out, _ = run(capsys, "compute", "k", "--mu1", "0", "--mu2", "0",
                       "--qdeg", "2")
    assert code == 0
    assert "O(Q^3)" in out


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "partitions", "--max-weight", "5")
    assert code == 0
    assert "0 failed" in out
    assert not any(line.lstrip().startswith("fail") for line in out.splitlines())


def test_verify_unknown_suite_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_inject_failure(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "partitions", "--max-weight", "3",
                       "--inject-failure", "--json", str(path))
    assert code == 1
    doc = json.loads(path.read_text())
    assert doc["summary"]["failed"] == 1
    bad = [e for e in doc["entries"] if e["status"] == "fail"]
    assert len(bad) == 1 and "witness" in bad[0]


def test_verify_json_deterministic_across_threads(capsys, tmp_path):
    p1 = tmp_path / "t1.json"
    p2 = tmp_path / "t2.json"
    a = run(capsys, "verify", "prodred", "--max-weight", "4",
            "--threads", "1", "--json", str(p1))
    b = run(capsys, "verify", "prodred", "--max-weight", "4",
            "--threads", "3", "--json", str(p2))
    assert a[0] == 0 and b[0] == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_config_file_and_overrides(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("max_weight=3\nqdeg=3\n")
    code, out, _ = run(capsys, "verify", "partitions", "--config", str(cfg))
    assert code == 0
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "partitions", "--config", str(cfg),
                       "--max-weight", "4", "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["params"]["max_weight"] == 4


def test_config_unknown_key_exits_two(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("wibble=3\n")
    code, _, err = run(capsys, "verify", "partitions", "--config", str(cfg))
    assert code == 2


def test_compute_missing_argument_exits_two(capsys):
    code, _, err = run(capsys, "compute", "w1")
    assert code == 2
