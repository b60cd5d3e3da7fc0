import json
import math
import subprocess
import sys

import pytest

from cubedensity.arith import W, CongruenceSelector
from cubedensity.cli import fit_table, main
from cubedensity.sieve import Checkpoint, CountTable


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_verify_50(capsys):
    code, out, _ = run(capsys, "verify", "--limit", "50")
    assert code == 0
    (rec,) = records(out)
    assert rec["status"] == "ok" and rec["members"] == 18
    assert rec["first_members"] == [1, 2, 3, 5, 6, 10, 11, 15, 17, 22, 23, 29, 30, 33, 34, 41, 46, 47]


def test_verify_1(capsys):
    code, out, _ = run(capsys, "verify", "--limit", "1")
    assert code == 0 and records(out)[0]["members"] == 1


def test_verify_limit_checked(capsys):
    assert run(capsys, "verify", "--limit", "1000001")[0] == 2
    assert run(capsys, "verify", "--limit", "0")[0] == 2


def test_count_powers_of_two(capsys):
    code, out, _ = run(capsys, "count", "--modulus", "2", "--forbid", "1", "--limit", "1024",
                       "--checkpoints", "1024")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,count,predicted,ratio"
    n, count, pred, ratio = lines[1].split(",")
    assert (int(n), int(count)) == (1024, 11)
    assert float(pred) == pytest.approx(10.0, rel=1e-14)
    assert float(ratio) == pytest.approx(1.1, rel=1e-14)


def test_count_finite_family(capsys):
    code, out, err = run(capsys, "count", "--modulus", "3", "--forbid", "1,2", "--squarefree",
                         "--limit", "1000")
    assert code == 0
    assert "finite with 2 elements" in err
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert rows[-1] == ["1000", "2", "", ""]


def test_count_W_decades_json(capsys):
    code, out, _ = run(capsys, "count", "--family", "W", "--limit", "10**6", "--format", "json")
    assert code == 0
    recs = records(out)
    assert [r["n"] for r in recs] == [10**k for k in range(1, 7)]
    assert [r["count"] for r in recs] == [6, 32, 262, 2243, 20005, 182023]
    ratios = [r["ratio"] for r in recs][2:]
    assert all(1 < b < a < 1.04 for a, b in zip(ratios, ratios[1:]))


def test_count_workers_same_output(capsys):
    a = run(capsys, "count", "--family", "V", "--limit", "3e6", "--workers", "1")[1]
    b = run(capsys, "count", "--family", "V", "--limit", "3e6", "--workers", "2")[1]
    assert a == b


def test_count_csv_round_trip(tmp_path, capsys):
    path = tmp_path / "w.csv"
    code, _, _ = run(capsys, "count", "--family", "W", "--limit", "100000", "--output", str(path))
    assert code == 0
    text = path.read_text()
    table = CountTable.from_csv(text, W)
    assert table.to_csv() == text
    assert table.checkpoints[-1].count == 20005


@pytest.mark.parametrize("argv", [
    ["count", "--modulus", "3", "--forbid", "4", "--limit", "10"],
    ["count", "--modulus", "0", "--forbid", "", "--limit", "10"],
    ["count", "--limit", "10", "--checkpoints", "11"],
    ["count", "--limit", "2000000000"],
    ["constants", "--name", "zeta3"],
    ["sample", "--s", "1.0"],
    ["sample", "--samples", "100"],
    ["enumerate", "--limit", "1000000000"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--limit", "ten"])
    assert exc.value.code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "W", "--limit", "12")
    assert code == 0 and out.split() == ["1", "2", "3", "5", "6", "10", "11"]
    code, out, _ = run(capsys, "enumerate", "--modulus", "2", "--forbid", "1", "--limit", "20")
    assert out.split() == ["1", "2", "4", "8", "16"]


def test_forbid_zero_means_m(capsys):
    a = run(capsys, "enumerate", "--modulus", "3", "--forbid", "0", "--limit", "30")[1]
    b = run(capsys, "enumerate", "--modulus", "3", "--forbid", "3", "--limit", "30")[1]
    assert a == b and "3\n" not in a.splitlines(keepends=True)


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--name", "C,L_chi1,p2,b,c_a(3,1)")
    assert code == 0
    recs = {r["name"]: r for r in records(out)}
    assert abs(recs["C"]["value"] - 0.664) <= 0.0005
    assert recs["L_chi1"]["value"] == pytest.approx(math.pi / (3 * math.sqrt(3)), abs=1e-15)
    assert recs["L_chi1"]["method"] == "closed_form"
    assert round(recs["p2"]["value"], 4) == 0.7072
    assert 0.763 <= recs["b"]["value"] <= 0.765
    assert recs["c_a(3,1)"]["method"] == "extrapolated"
    for r in recs.values():
        assert list(r) == ["name", "value", "method", "tolerance_or_prime_limit", "tail_bound"]


def test_fit_W_50():
    table = CountTable(W, [Checkpoint(50, 18), Checkpoint(100, 32), Checkpoint(1000, 262)])
    res = fit_table(table)
    assert res["rows"][0]["r"] == pytest.approx(18 * math.sqrt(math.log(50)) / 50)
    assert round(res["rows"][0]["r"], 3) == 0.712


def test_fit_needs_two_large_checkpoints():
    with pytest.raises(Exception):
        fit_table(CountTable(W, [Checkpoint(50, 18), Checkpoint(100, 32)]))


def test_fit_from_file(tmp_path, capsys):
    path = tmp_path / "w.csv"
    run(capsys, "count", "--family", "W", "--limit", "10**6", "--output", str(path))
    code, out, _ = run(capsys, "fit", "--family", "W", "--input", str(path))
    assert code == 0
    (res,) = records(out)
    assert res["log_exponent"] == 0.5
    assert abs(res["r_last"] - res["predicted_constant"]) < 0.1 * res["predicted_constant"]


def test_fit_degenerate_matches_ratio_column(tmp_path, capsys):
    path = tmp_path / "p2.csv"
    run(capsys, "count", "--modulus", "2", "--forbid", "1", "--limit", "2**29", "--output", str(path))
    table = CountTable.from_csv(path.read_text(), CongruenceSelector(2, frozenset({1})))
    code, out, _ = run(capsys, "fit", "--modulus", "2", "--forbid", "1", "--input", str(path))
    assert code == 0
    rows = records(out)[0]["rows"]
    by_n = {c.n: c.ratio for c in table.checkpoints}
    for row in rows:
        assert row["r"] == pytest.approx(by_n[row["n"]], rel=1e-12)


def test_fit_missing_file(capsys):
    assert run(capsys, "fit", "--input", "/nonexistent/file.csv")[0] == 2


def test_sample_reproducible(capsys):
    argv = ["sample", "--samples", "200000", "--seed", "42"]
    code, a, _ = run(capsys, *argv)
    assert code == 0
    assert a == run(capsys, *argv)[1]
    assert a != run(capsys, "sample", "--samples", "200000", "--seed", "43")[1]
    assert all(abs(r["z_score"]) <= 4 for r in records(a))


@pytest.mark.parametrize("argv, expected", [
    (["--family", "V"], 0.96710407561337),
    (["--modulus", "1", "--forbid", "", "--squarefree"], 90 / math.pi**4),
    (["--modulus", "1", "--forbid", ""], 1.0),
])
def test_sample_membership_examples(capsys, argv, expected):
    code, out, _ = run(capsys, "sample", "--test", "membership", "--samples", "10**5", *argv)
    (rec,) = records(out)
    assert code == 0
    assert rec["expected"] == pytest.approx(expected, abs=1e-6)


def test_sample_divisibility_and_valuation(capsys):
    code, out, _ = run(capsys, "sample", "--test", "divisibility", "--d", "6", "--s", "3")
    assert code == 0 and records(out)[0]["expected"] == pytest.approx(1 / 216)
    code, out, _ = run(capsys, "sample", "--test", "valuation", "--primes", "2,3", "--thresholds", "1,1")
    assert code == 0 and records(out)[0]["expected"] == pytest.approx(1 / 36)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cubedensity", "verify", "--limit", "100"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "ok"
