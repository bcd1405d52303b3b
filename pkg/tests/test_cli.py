import json
import subprocess
import sys

from vassiliev.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dims_text(capsys):
    code, out, _ = run_cli(capsys, "dims", "--max-degree", "3")
    assert code == 0
    assert "d: 1" in out and "degree: 3" in out


def test_dims_json_values(capsys):
    code, out, _ = run_cli(capsys, "dims", "--max-degree", "4",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    dims = {row["degree"]: (row["d"], row["d_hat"])
            for row in data["dimensions"]}
    assert dims == {0: (1, 0), 1: (0, 0), 2: (1, 1), 3: (1, 1), 4: (3, 2)}


def test_dims_unreduced(capsys):
    code, out, _ = run_cli(capsys, "dims", "--max-degree", "3",
                           "--unreduced", "--format", "json")
    assert code == 0
    data = json.loads(out)
    dims = {row["degree"]: row["d"] for row in data["dimensions"]}
    assert dims == {0: 1, 1: 1, 2: 2, 3: 3}


def test_jones_table_and_mirror(capsys):
    code, out, _ = run_cli(capsys, "jones", "--knot", "0_1")
    assert code == 0 and "jones: 1" in out
    code, out, _ = run_cli(capsys, "jones", "--knot", "3_1")
    assert code == 0 and "t^-1 + t^-3 - t^-4" in out
    code, out2, _ = run_cli(capsys, "jones", "--knot", "3_1!")
    assert code == 0 and "-t^4 + t^3 + t" in out2


def test_jones_inline_pd_and_braid(capsys):
    code, out, _ = run_cli(capsys, "jones", "--braid", "2:-1,-1,-1")
    assert code == 0 and "t^-1 + t^-3 - t^-4" in out
    pd = "X(6,3,1,4) X(2,5,3,6) X(4,1,5,2)"
    code, out2, _ = run_cli(capsys, "jones", "--pd", pd)
    assert code == 0 and "t^-1 + t^-3 - t^-4" in out2


def test_homfly_cmd(capsys):
    code, out, _ = run_cli(capsys, "homfly", "--knot", "4_1")
    assert code == 0 and "homfly:" in out


def test_weight_cmd(capsys):
    code, out, _ = run_cli(capsys, "weight",
                           "--diagram", "L=2 T=0 1-2")
    assert code == 0 and "1/2*N - 1/2*N^-1" in out
    code, out, _ = run_cli(capsys, "weight", "--diagram", "L=2 T=0 1-2",
                           "--rank", "2")
    assert code == 0 and "value: 3/4" in out


def test_basis_cmd_with_cache(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    code, out, _ = run_cli(capsys, "basis", "--max-degree", "3",
                           "--cache-dir", cache)
    assert code == 0 and "connected" in out
    # second run hits the cache and reports the same elements
    code, out2, _ = run_cli(capsys, "basis", "--max-degree", "3",
                            "--cache-dir", cache)
    assert code == 0 and out == out2


def test_extract_cmd(capsys):
    code, out, _ = run_cli(capsys, "extract", "--knot", "3_1",
                           "--max-degree", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["degrees"][0]["alphas"] == ["4"]
    assert data["degrees"][1]["alphas"] == ["8"]
    assert data["values"] == "exact-rational"


def test_verify_cmd_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--knot", "3_1",
                           "--max-degree", "3")
    assert code == 0
    assert "passed: True" in out


def test_identities_cmd(capsys):
    code, out, _ = run_cli(capsys, "identities", "--max-degree", "4")
    assert code == 0
    assert "1/2 * alpha:2:1^2" in out
    code, out2, _ = run_cli(capsys, "identities", "--max-degree", "3",
                            "--framing")
    assert code == 0
    assert "exp(n * C2 * x^1)" in out2


def test_usage_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "jones", "--knot", "17_99")
    assert code == 2 and "unknown knot" in err
    code, _, _ = run_cli(capsys, "jones", "--knot", "3_1", "--pd", "X(1,2,3,4)")
    assert code == 2


def test_budget_exit_3(capsys):
    code, _, err = run_cli(capsys, "homfly", "--braid",
                           "2:" + ",".join(["1"] * 13))
    assert code == 3 and "budget" in err


def test_byte_identical_reports():
    cmd = [sys.executable, "-m", "vassiliev.cli", "dims",
           "--max-degree", "3", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
